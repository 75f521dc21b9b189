// igp command-line front end. Links only the public C API (igp.h); all
// mathematics lives in the shared library. Every stdout line is one JSON
// object (or one streamed element); errors go to stderr. Exit codes:
// 0 success, 1 domain/runtime failure, 2 usage.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "igp.h"

namespace {

// Frees C-API strings on scope exit.
struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { igp_free_string(ptr); }
  std::string str() const { return ptr == nullptr ? std::string() : ptr; }
};

struct SeqHandle {
  igp_seq* ptr = nullptr;
  ~SeqHandle() { igp_seq_free(ptr); }
};

struct PadicHandle {
  igp_padic* ptr = nullptr;
  ~PadicHandle() { igp_padic_free(ptr); }
};

struct LsetHandle {
  igp_lset* ptr = nullptr;
  ~LsetHandle() { igp_lset_free(ptr); }
};

// Exit-code-1 failure carrying the C API's message.
struct RuntimeFailure {
  std::string message;
};

void check(igp_status st) {
  if (st != IGP_OK) throw RuntimeFailure{igp_last_error()};
}

uint64_t enumeration_budget() {
  const char* env = std::getenv("PADIC_BUDGET");
  if (env == nullptr || *env == '\0') return 100000000ULL;
  try {
    size_t pos = 0;
    unsigned long long v = std::stoull(env, &pos);
    if (env[pos] != '\0') throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    std::cerr << "{\"error\":\"PADIC_BUDGET must be a nonnegative integer\"}\n";
    std::exit(2);
  }
}

// --seq accepts an inline comma-separated list or a path to a file holding
// either a JSON array (numbers or "num/den" strings) or the same comma text.
igp_seq* load_sequence(const std::string& spec, bool alternate) {
  std::string text = spec;
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) {
      throw RuntimeFailure{"sequence JSON must be an array"};
    }
    SeqHandle seq;
    check(igp_seq_new(&seq.ptr));
    for (const auto& item : arr) {
      std::string entry = item.is_string() ? item.get<std::string>() : item.dump();
      check(igp_seq_push(seq.ptr, entry.c_str()));
    }
    if (igp_seq_len(seq.ptr) == 0) throw RuntimeFailure{"empty sequence"};
    igp_seq* out = seq.ptr;
    seq.ptr = nullptr;
    if (alternate) {
      igp_seq* alt = nullptr;
      igp_status st = igp_seq_alternated(out, &alt);
      igp_seq_free(out);
      check(st);
      return alt;
    }
    return out;
  }
  igp_seq* out = nullptr;
  check(igp_seq_parse(text.c_str(), &out));
  if (alternate) {
    igp_seq* alt = nullptr;
    igp_status st = igp_seq_alternated(out, &alt);
    igp_seq_free(out);
    check(st);
    return alt;
  }
  return out;
}

std::string seq_json_array(const igp_seq* s) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < igp_seq_len(s); ++i) {
    OwnedString entry;
    check(igp_seq_get(s, i, &entry.ptr));
    if (i) os << ",";
    os << "\"" << entry.str() << "\"";
  }
  os << "]";
  return os.str();
}

int cmd_mvalues(const std::string& seq_spec, bool alternate, std::optional<size_t> k) {
  SeqHandle f;
  f.ptr = load_sequence(seq_spec, alternate);
  size_t len = igp_seq_len(f.ptr);
  size_t kk = k.value_or(len > 0 ? len - 1 : 0);
  SeqHandle m;
  check(igp_mvalues(f.ptr, kk, &m.ptr));
  std::cout << "{\"k\":" << kk << ",\"m\":" << seq_json_array(m.ptr) << "}\n";
  return 0;
}

int cmd_continuity(const std::string& seq_spec, bool alternate, unsigned long p) {
  SeqHandle f;
  f.ptr = load_sequence(seq_spec, alternate);
  OwnedString json;
  check(igp_continuity_criterion(f.ptr, p, &json.ptr));
  std::cout << json.str() << "\n";
  return 0;
}

int cmd_gammap(unsigned long p, unsigned N, const std::string& s,
               const std::string& r, const std::string& route) {
  OwnedString json;
  check(igp_gamma_report(p, N, s.c_str(), r.c_str(), route.c_str(), &json.ptr));
  std::cout << json.str() << "\n";
  return 0;
}

int cmd_enumerate(const std::string& kind, unsigned n, unsigned r,
                  const std::string& lspec, std::optional<unsigned> prefix,
                  bool list) {
  uint64_t budget = enumeration_budget();
  if (kind == "wreath-derangements" || kind == "wreath-arrangements") {
    if (list) {
      auto emit = +[](const char* line, void*) {
        std::fputs(line, stdout);
        std::fputc('\n', stdout);
      };
      if (kind == "wreath-derangements") {
        check(igp_stream_wreath_derangements(n, r, budget, emit, nullptr));
      } else {
        check(igp_stream_wreath_arrangements(n, r, budget, emit, nullptr));
      }
      return 0;
    }
    uint64_t der = 0, arr = 0;
    check(igp_wreath_derangements(n, r, budget, &der));
    check(igp_wreath_arrangements(n, r, budget, &arr));
    std::cout << "{\"n\":" << n << ",\"r\":" << r << ",\"derangements\":" << der
              << ",\"arrangements\":" << arr << "}\n";
    return 0;
  }
  if (kind == "cycle-restricted") {
    if (list) {
      std::cerr << "{\"error\":\"--list applies to the wreath kinds only\"}\n";
      return 2;
    }
    unsigned top = prefix.value_or(n);
    LsetHandle L;
    check(igp_lset_preset(lspec.c_str(), std::max<uint64_t>(top, 1) + 1, &L.ptr));
    OwnedString desc;
    check(igp_lset_describe(L.ptr, &desc.ptr));
    OwnedString counts;
    check(igp_cycle_restricted_counts(L.ptr, top, &counts.ptr));
    if (prefix.has_value()) {
      std::cout << "{\"L\":\"" << desc.str() << "\",\"prefix\":" << top
                << ",\"counts\":" << counts.str() << "}\n";
    } else {
      // counts.str() is a JSON array of quoted integers; take the last.
      nlohmann::json arr = nlohmann::json::parse(counts.str());
      std::cout << "{\"L\":\"" << desc.str() << "\",\"n\":" << n
                << ",\"count\":\"" << arr.back().get<std::string>() << "\"}\n";
    }
    return 0;
  }
  std::cerr << "{\"error\":\"unknown --kind " << kind << "\"}\n";
  return 2;
}

int cmd_verify(const std::string& identity, unsigned n_max, unsigned r_max,
               unsigned long p, unsigned N, const std::string& lspec) {
  uint64_t budget = enumeration_budget();
  unsigned long failures = 0;
  unsigned long cases = 0;
  if (identity == "floor") {
    for (unsigned n = 1; n <= n_max; ++n) {
      for (long rr = -static_cast<long>(r_max); rr <= static_cast<long>(r_max); ++rr) {
        if (rr == 0) continue;
        OwnedString json;
        check(igp_verify_floor(n, rr, &json.ptr));
        std::cout << json.str() << "\n";
        ++cases;
        if (json.str().find("\"pass\":true") == std::string::npos) ++failures;
      }
    }
  } else if (identity == "gamma-consistency") {
    const long pl = static_cast<long>(p);
    const long rs[] = {1, 1 + pl, 1 - pl, 1 + 2 * pl, 1 - 2 * pl};
    for (unsigned n = 1; n <= n_max; ++n) {
      for (long rr : rs) {
        if (rr == 0) continue;
        OwnedString json;
        check(igp_classical_consistency(n, rr, p, N, &json.ptr));
        std::cout << json.str() << "\n";
        ++cases;
        if (json.str().find("\"equal\":true") == std::string::npos) ++failures;
      }
    }
  } else if (identity == "egf-oracle") {
    LsetHandle L;
    check(igp_lset_preset(lspec.c_str(), std::max<uint64_t>(n_max, 1) + 1, &L.ptr));
    OwnedString desc;
    check(igp_lset_describe(L.ptr, &desc.ptr));
    OwnedString counts_json;
    check(igp_cycle_restricted_counts(L.ptr, n_max, &counts_json.ptr));
    nlohmann::json egf = nlohmann::json::parse(counts_json.str());
    for (unsigned n = 0; n <= n_max; ++n) {
      OwnedString brute;
      check(igp_cycle_restricted_count(L.ptr, n, budget, &brute.ptr));
      std::string via_egf = egf.at(n).get<std::string>();
      bool pass = via_egf == brute.str();
      std::cout << "{\"identity\":\"egf-oracle\",\"L\":\"" << desc.str()
                << "\",\"n\":" << n << ",\"brute\":\"" << brute.str()
                << "\",\"egf\":\"" << via_egf << "\",\"pass\":"
                << (pass ? "true" : "false") << "}\n";
      ++cases;
      if (!pass) ++failures;
    }
  } else {
    std::cerr << "{\"error\":\"unknown --identity " << identity << "\"}\n";
    return 2;
  }
  std::cout << "{\"identity\":\"" << identity << "\",\"cases\":" << cases
            << ",\"failures\":" << failures << "}\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact p-adic incomplete gamma, m-value continuity analysis, "
               "and wreath-product enumeration"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(igp_version()); });

  // mvalues
  auto* mv = app.add_subcommand("mvalues", "m-values of a sequence with f(0) = 1");
  std::string mv_seq;
  bool mv_alt = false;
  std::optional<size_t> mv_k;
  mv->add_option("--seq", mv_seq, "inline comma-separated rationals or a file path")
      ->required();
  mv->add_flag("--alternate", mv_alt, "multiply entry n by (-1)^n first");
  mv->add_option("--k", mv_k, "how many m-values (default: len - 1)");

  // continuity
  auto* ct = app.add_subcommand("continuity",
                                "continuity-criterion verdict for a sequence");
  std::string ct_seq;
  bool ct_alt = false;
  unsigned long ct_p = 0;
  ct->add_option("--seq", ct_seq, "inline comma-separated rationals or a file path")
      ->required();
  ct->add_flag("--alternate", ct_alt, "multiply entry n by (-1)^n first");
  ct->add_option("--p", ct_p, "prime")->required();

  // gammap
  auto* gp = app.add_subcommand("gammap", "p-adic incomplete gamma value");
  unsigned long gp_p = 0;
  unsigned gp_N = 0;
  std::string gp_s, gp_r, gp_route = "all";
  gp->add_option("--p", gp_p, "odd prime")->required();
  gp->add_option("--N", gp_N, "precision (digits of p)")->required();
  gp->add_option("--s", gp_s, "s in Z_p, as a rational string")->required();
  gp->add_option("--r", gp_r, "r = 1 mod p, as a rational string")->required();
  gp->add_option("--route", gp_route, "all|factored|series|truncexp")
      ->check(CLI::IsMember({"all", "factored", "series", "truncexp"}));

  // enumerate
  auto* en = app.add_subcommand("enumerate",
                                "count or stream wreath/cycle-restricted objects");
  std::string en_kind, en_L = "all";
  unsigned en_n = 0, en_r = 1;
  std::optional<unsigned> en_prefix;
  bool en_list = false;
  en->add_option("--kind", en_kind,
                 "wreath-derangements|wreath-arrangements|cycle-restricted")
      ->required()
      ->check(CLI::IsMember(
          {"wreath-derangements", "wreath-arrangements", "cycle-restricted"}));
  en->add_option("--n", en_n, "degree")->required();
  en->add_option("--r", en_r, "number of colors (wreath kinds)");
  en->add_option("--L", en_L, "cycle-length preset (cycle-restricted)");
  en->add_option("--prefix", en_prefix,
                 "emit counts for 0..K instead of a single count");
  en->add_flag("--list", en_list, "stream elements in deterministic order");

  // verify
  auto* vf = app.add_subcommand("verify", "run a verification table");
  std::string vf_identity, vf_L = "primes";
  unsigned vf_nmax = 20, vf_rmax = 10, vf_N = 12;
  unsigned long vf_p = 5;
  vf->add_option("--identity", vf_identity, "floor|gamma-consistency|egf-oracle")
      ->required()
      ->check(CLI::IsMember({"floor", "gamma-consistency", "egf-oracle"}));
  vf->add_option("--n-max", vf_nmax, "largest degree (default 20)");
  vf->add_option("--r-max", vf_rmax, "largest |r| for floor (default 10)");
  vf->add_option("--p", vf_p, "prime for gamma-consistency (default 5)");
  vf->add_option("--N", vf_N, "precision for gamma-consistency (default 12)");
  vf->add_option("--L", vf_L, "preset for egf-oracle (default primes)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mv->parsed()) return cmd_mvalues(mv_seq, mv_alt, mv_k);
    if (ct->parsed()) return cmd_continuity(ct_seq, ct_alt, ct_p);
    if (gp->parsed()) return cmd_gammap(gp_p, gp_N, gp_s, gp_r, gp_route);
    if (en->parsed())
      return cmd_enumerate(en_kind, en_n, en_r, en_L, en_prefix, en_list);
    if (vf->parsed())
      return cmd_verify(vf_identity, vf_nmax, vf_rmax, vf_p, vf_N, vf_L);
  } catch (const RuntimeFailure& e) {
    std::cerr << "{\"error\":" << nlohmann::json(e.message).dump() << "}\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "{\"error\":" << nlohmann::json(std::string(e.what())).dump()
              << "}\n";
    return 1;
  }
  return 2;
}

// fusionprod: fusion products of sl(n+1) evaluation modules, their defining
// relations, and Schur positivity checks at desk scale.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "CLI11.hpp"

#include "fusionprod/errors.hpp"
#include "fusionprod/json_io.hpp"

namespace fp = fusionprod;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
  int n = 1;
  int m = 1;
  std::string ell;
  std::string params;
  int cap_degree = -1;
  int cap_relations = -1;
  std::string format = "json";
  std::string out;
};

std::vector<fp::Rat> parse_params(const std::string& s) {
  std::vector<fp::Rat> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    auto slash = cur.find('/');
    if (slash == std::string::npos) {
      out.emplace_back(std::stoll(cur));
    } else {
      out.emplace_back(std::stoll(cur.substr(0, slash)),
                       std::stoll(cur.substr(slash + 1)));
    }
    cur.clear();
  };
  for (char c : s) {
    if (c == ',')
      flush();
    else if (!isspace(static_cast<unsigned char>(c)))
      cur += c;
  }
  flush();
  return out;
}

void emit(const fp::json& report, const CommonOpts& opts) {
  std::string text = report.dump(2) + "\n";
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opts.out);
    f << text;
  }
}

fp::json config_json(const CommonOpts& opts, const fp::RelationCaps& caps) {
  fp::json cfg;
  cfg["version"] = kVersion;
  cfg["n"] = opts.n;
  cfg["m"] = opts.m;
  cfg["caps"] = fp::caps_to_json(caps);
  return cfg;
}

std::string table_of_graded(const fp::GradedCharacter& gc) {
  std::string out = "weight\tdegree\tmult\n";
  for (const auto& [key, mult] : gc) {
    out += "(";
    for (size_t i = 0; i < key.first.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(key.first[i]);
    }
    out += ")\t" + std::to_string(key.second) + "\t" + std::to_string(mult) +
           "\n";
  }
  return out;
}

int worker_count() {
  if (const char* env = std::getenv("FUSIONPROD_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int cmd_fusion_char(const CommonOpts& opts, bool dump_module) {
  fp::Partition ell = fp::Partition::parse(opts.ell);
  std::vector<fp::Rat> params = parse_params(opts.params);
  fp::RelationCaps caps = fp::resolve_caps(
      opts.n, opts.m, ell, {opts.cap_degree, opts.cap_relations, -1});
  fp::FusionProduct fusion =
      fp::FusionProduct::build(opts.n, opts.m, ell, params);

  fp::json report;
  report["config"] = config_json(opts, caps);
  report["command"] = "fusion-char";
  report["ell"] = ell.parts();
  report["dim"] = fusion.dim();
  report["top_degree"] = fusion.top_degree();
  fp::json dims = fp::json::array();
  {
    std::vector<long long> per_degree(fusion.top_degree() + 1, 0);
    for (const auto& [key, mult] : fusion.graded_character())
      per_degree[key.second] += mult;
    for (long long d : per_degree) dims.push_back(d);
  }
  report["graded_dims"] = dims;
  report["graded_character"] =
      fp::graded_character_to_json(fusion.graded_character());
  if (dump_module && ell.length() >= 1) {
    report["factors"] = fp::json::array();
    for (int i = 1; i <= ell.length(); ++i)
      report["factors"].push_back(fp::module_to_json(
          *fp::irrep_cached(opts.n, ell.part(i), opts.m)));
  }
  if (opts.format == "table") {
    std::cout << table_of_graded(fusion.graded_character());
    if (!opts.out.empty()) emit(report, opts);
  } else {
    emit(report, opts);
  }
  return 0;
}

int cmd_verify(const CommonOpts& opts) {
  fp::Partition ell = fp::Partition::parse(opts.ell);
  std::vector<fp::Rat> params = parse_params(opts.params);
  fp::Verdict v = fp::verify_theorem_instance(
      opts.n, opts.m, ell, {opts.cap_degree, opts.cap_relations, -1}, params);
  fp::json report = fp::verdict_to_json(v);
  report["config"] = config_json(opts, v.caps_used);
  if (opts.format == "table") {
    std::cout << "instance\tn=" << v.n << " m=" << v.m << " ell=" << ell.str()
              << "\nwitness\t" << (v.surjection_witness ? "yes" : "no")
              << "\ndim\t" << v.dim_presented << " / " << v.dim_fusion
              << "\nchars\t" << (v.graded_char_equal ? "equal" : "differ")
              << "\nverdict\t" << (v.pass ? "PASS" : "FAIL") << "\n";
    if (!opts.out.empty()) emit(report, opts);
  } else {
    emit(report, opts);
  }
  return v.pass ? 0 : 1;
}

int cmd_schur(const CommonOpts& opts, const std::string& r_str,
              const std::string& sweep, bool diagnostic) {
  if (!sweep.empty()) {
    // --sweep total=T,maxp=P: all dominant pairs with the given total.
    long long total = -1;
    int maxp = 2;
    for (const std::string& kv : {sweep.substr(0, sweep.find(',')),
                                  sweep.find(',') == std::string::npos
                                      ? std::string()
                                      : sweep.substr(sweep.find(',') + 1)}) {
      if (kv.rfind("total=", 0) == 0) total = std::stoll(kv.substr(6));
      if (kv.rfind("maxp=", 0) == 0) maxp = std::stoi(kv.substr(5));
    }
    if (total < 1) throw CLI::ValidationError("--sweep needs total=T");

    std::vector<fp::Partition> parts;
    std::vector<int> cur;
    std::function<void(long long, int)> gen = [&](long long rem, int maxpart) {
      if (rem == 0) {
        parts.emplace_back(cur);
        return;
      }
      if (static_cast<int>(cur.size()) >= maxp) return;
      for (int p = static_cast<int>(std::min<long long>(rem, maxpart)); p >= 1;
           --p) {
        cur.push_back(p);
        gen(rem - p, p);
        cur.pop_back();
      }
    };
    gen(total, static_cast<int>(total));

    struct Item {
      fp::Partition ell, r;
    };
    std::vector<Item> items;
    for (const auto& a : parts)
      for (const auto& b : parts)
        if (!(a == b) && fp::dominates(a, b)) items.push_back({a, b});

    std::vector<fp::SchurVerdict> results(items.size());
    std::atomic<size_t> next{0};
    int workers = std::min<int>(worker_count(), static_cast<int>(items.size()));
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, workers); ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < items.size();
             i = next.fetch_add(1))
          results[i] =
              fp::schur_pair_verdict(opts.n, opts.m, items[i].ell, items[i].r);
      });
    for (auto& th : pool) th.join();

    fp::json report;
    report["config"] = config_json(
        opts, fp::resolve_caps(opts.n, opts.m, fp::Partition({1}), {}));
    report["command"] = "schur-sweep";
    report["total"] = total;
    report["maxp"] = maxp;
    bool all_ok = true;
    fp::json list = fp::json::array();
    for (const auto& v : results) {
      list.push_back(fp::schur_verdict_to_json(v));
      all_ok = all_ok && v.schur_positive && v.witness;
    }
    report["pairs"] = list;
    report["all_positive"] = all_ok;
    emit(report, opts);
    return all_ok ? 0 : 1;
  }

  fp::Partition ell = fp::Partition::parse(opts.ell);
  fp::Partition r = fp::Partition::parse(r_str);
  fp::SchurVerdict v =
      fp::schur_pair_verdict(opts.n, opts.m, ell, r, diagnostic);
  fp::json report = fp::schur_verdict_to_json(v);
  report["config"] = config_json(
      opts, fp::resolve_caps(opts.n, opts.m, ell, {opts.cap_degree,
                                                   opts.cap_relations, -1}));
  if (opts.format == "table") {
    std::cout << "pair\t" << ell.str() << " -> " << r.str() << "\ndominates\t"
              << (v.applicable ? "yes" : "no") << "\npositive\t"
              << (v.schur_positive ? "yes" : "no") << "\nwitness\t"
              << (v.witness ? "yes" : "no") << "\n";
    if (!opts.out.empty()) emit(report, opts);
  } else {
    emit(report, opts);
  }
  if (!v.applicable) return diagnostic ? 0 : 1;
  return (v.schur_positive && v.witness) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusion products of sl(n+1) modules: graded characters, "
               "defining-relation verification, Schur positivity"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOpts opts;
  bool dump_module = false;
  std::string r_str, sweep;
  bool diagnostic = false;

  auto add_common = [&](CLI::App* cmd, bool need_ell) {
    cmd->add_option("-n,--rank", opts.n, "rank n of sl(n+1)")->required();
    cmd->add_option("-m,--node", opts.m, "fundamental weight index")
        ->required();
    auto* lopt = cmd->add_option("-l,--ell", opts.ell,
                                 "partition, comma separated (e.g. 2,1)");
    if (need_ell) lopt->required();
    cmd->add_option("--params", opts.params,
                    "evaluation parameters, comma separated rationals");
    cmd->add_option("--cap-degree", opts.cap_degree, "t-degree cap");
    cmd->add_option("--cap-relations", opts.cap_relations,
                    "bound on r+s in the relation families");
    cmd->add_option("--format", opts.format, "json|table");
    cmd->add_option("--out", opts.out, "write the JSON report to a file");
  };

  CLI::App* fc = app.add_subcommand("fusion-char",
                                    "graded character of a fusion product");
  add_common(fc, true);
  fc->add_flag("--dump-factors", dump_module,
               "include the factor modules in the report");

  CLI::App* vf = app.add_subcommand("verify",
                                    "verify the defining-relation presentation "
                                    "of a fusion product");
  add_common(vf, true);

  CLI::App* sc = app.add_subcommand("schur",
                                    "Schur positivity and surjection witness "
                                    "for a dominant pair");
  add_common(sc, false);
  sc->add_option("--r", r_str, "second partition, comma separated");
  sc->add_option("--sweep", sweep, "sweep all dominant pairs: total=T,maxp=P");
  sc->add_flag("--diagnostic", diagnostic,
               "report the signed decomposition even without dominance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fc->parsed()) return cmd_fusion_char(opts, dump_module);
    if (vf->parsed()) return cmd_verify(opts);
    if (sc->parsed()) {
      if (sweep.empty() && (opts.ell.empty() || r_str.empty())) {
        std::cerr << "schur: need --ell and --r, or --sweep\n";
        return 2;
      }
      return cmd_schur(opts, r_str, sweep, diagnostic);
    }
  } catch (const fp::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

// Command line front end: construct root data, compute products and normal
// forms, and run the named verification suites.
//
// Exit codes: 0 success, 1 verification failure (or membership rejection),
// 2 usage error (bad flags, malformed JSON).

#include <CLI11.hpp>

#include <iostream>

#include "nhk/serialize.hpp"
#include "nhk/suites.hpp"

namespace {

using nhk::EvalContext;
using nhk::Json;
using nhk::RootDatum;

Json parse_json_arg(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CLI::ValidationError(what, e.what());
  }
}

struct Shared {
  std::string type = "A1";
  bool json = false;
};

int run(int argc, char** argv) {
  CLI::App app{"exact nil-Hecke algebra kernel"};
  app.require_subcommand(1);

  Shared shared;
  nhk::SuiteOptions suite_opts;
  std::string elem_text, a_text, b_text, poly_text, suite_name, case_text;
  bool serial = false;

  auto add_common = [&shared](CLI::App* cmd) {
    cmd->add_option("--type", shared.type, "Cartan type label (A1, A2, B2, ...)");
    cmd->add_flag("--json", shared.json, "machine-readable output");
  };

  CLI::App* root = app.add_subcommand("root", "root datum commands");
  CLI::App* root_show = root->add_subcommand("show", "print a root datum");
  add_common(root_show);

  CLI::App* weyl = app.add_subcommand("weyl", "extended affine Weyl group");
  CLI::App* weyl_word = weyl->add_subcommand("reduced-word", "canonical reduced word");
  add_common(weyl_word);
  weyl_word->add_option("--elem", elem_text, "group element JSON")->required();
  CLI::App* weyl_len = weyl->add_subcommand("length", "Iwahori-Matsumoto length");
  add_common(weyl_len);
  weyl_len->add_option("--elem", elem_text, "group element JSON")->required();

  CLI::App* skew = app.add_subcommand("skew", "skew group algebra");
  CLI::App* skew_mul = skew->add_subcommand("mul", "multiply two skew elements");
  add_common(skew_mul);
  skew_mul->add_option("--a", a_text, "left factor JSON")->required();
  skew_mul->add_option("--b", b_text, "right factor JSON")->required();
  CLI::App* skew_act = skew->add_subcommand("act", "act on a polynomial");
  add_common(skew_act);
  skew_act->add_option("--elem", elem_text, "skew element JSON")->required();
  skew_act->add_option("--poly", poly_text, "polynomial, e.g. '3/2*x1^2*h - x2'")
      ->required();

  CLI::App* nh = app.add_subcommand("nh", "nil-Hecke algebra");
  CLI::App* nh_mul_cmd = nh->add_subcommand("mul", "multiply two normal forms");
  add_common(nh_mul_cmd);
  nh_mul_cmd->add_option("--a", a_text, "left factor JSON")->required();
  nh_mul_cmd->add_option("--b", b_text, "right factor JSON")->required();
  CLI::App* nh_member = nh->add_subcommand("membership", "decide membership");
  add_common(nh_member);
  nh_member->add_option("--elem", elem_text, "skew element JSON")->required();
  CLI::App* nh_verify = nh->add_subcommand("verify", "run verification suites");
  add_common(nh_verify);
  nh_verify->add_option("suite", suite_name,
                        "suite name (braid, words, defrel, ddh, th0, membership, "
                        "faithfulness, phi2, spherical, morita-unit, "
                        "module-criterion, freeness) or 'all'");
  nh_verify->add_option("--case", case_text, "re-run one counterexample record");
  nh_verify->add_option("--max-length", suite_opts.max_length,
                        "length bound for word/freeness suites");
  nh_verify->add_option("--max-degree", suite_opts.max_degree,
                        "degree bound for polynomial suites");
  nh_verify->add_option("--cases", suite_opts.cases,
                        "case count for randomized suites");
  nh_verify->add_option("--seed", suite_opts.seed, "random seed");
  nh_verify->add_option("--budget-seconds", suite_opts.budget_seconds,
                        "per-suite wall clock budget");
  nh_verify->add_flag("--serial", serial, "disable the parallel case runner");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RootDatum datum = RootDatum::build(shared.type);
  EvalContext ctx = nhk::generic_context(datum);

  if (root_show->parsed()) {
    if (shared.json)
      std::cout << nhk::to_json(datum).dump(2) << "\n";
    else {
      std::cout << datum.label() << ": rank " << datum.rank() << ", "
                << 2 * datum.positive_roots().size() << " roots, |W| = "
                << datum.weyl_order() << ", |X*/Q| = "
                << datum.fundamental_group_order() << "\n";
      std::cout << "cartan (a[i][j] = <alpha_j, coroot_i>):\n";
      for (int i = 0; i < datum.rank(); ++i) {
        for (int j = 0; j < datum.rank(); ++j)
          std::cout << (j ? " " : "  ") << datum.cartan().at(i, j);
        std::cout << "\n";
      }
      std::cout << "highest root: ";
      for (size_t i = 0; i < datum.highest_root().root_coords.size(); ++i)
        std::cout << (i ? "," : "(") << datum.highest_root().root_coords[i];
      std::cout << ")\n";
    }
    return 0;
  }

  if (weyl_word->parsed() || weyl_len->parsed()) {
    nhk::ExtAffine w =
        nhk::ext_affine_from_json(datum, parse_json_arg(elem_text, "--elem"));
    if (weyl_len->parsed()) {
      if (shared.json)
        std::cout << Json{{"length", w.length()}}.dump() << "\n";
      else
        std::cout << w.length() << "\n";
      return 0;
    }
    auto [omega, word] = nhk::reduced_word(w);
    if (shared.json) {
      Json j;
      j["omega"] = nhk::to_json(omega);
      j["word"] = word;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "omega: " << nhk::to_json(omega).dump() << "\nword:";
      for (int i : word) std::cout << " " << i;
      std::cout << "\n";
    }
    return 0;
  }

  if (skew_mul->parsed()) {
    nhk::SkewElement a = nhk::skew_from_json(ctx, parse_json_arg(a_text, "--a"));
    nhk::SkewElement b = nhk::skew_from_json(ctx, parse_json_arg(b_text, "--b"));
    nhk::SkewElement c = a * b;
    std::cout << (shared.json ? nhk::to_json(c).dump() : c.str()) << "\n";
    return 0;
  }

  if (skew_act->parsed()) {
    nhk::SkewElement a =
        nhk::skew_from_json(ctx, parse_json_arg(elem_text, "--elem"));
    nhk::SparsePoly f = nhk::SparsePoly::parse(ctx.nvars(), poly_text);
    nhk::RootFraction result = a.act(f);
    std::cout << (shared.json ? nhk::to_json(ctx, result).dump() : result.str(ctx))
              << "\n";
    return 0;
  }

  if (nh_mul_cmd->parsed()) {
    nhk::NilHeckeElement a =
        nhk::nilhecke_from_json(ctx, parse_json_arg(a_text, "--a"));
    nhk::NilHeckeElement b =
        nhk::nilhecke_from_json(ctx, parse_json_arg(b_text, "--b"));
    nhk::NilHeckeElement c = nhk::nh_mul(a, b);
    std::cout << (shared.json ? nhk::to_json(c).dump() : c.str()) << "\n";
    return 0;
  }

  if (nh_member->parsed()) {
    nhk::SkewElement u =
        nhk::skew_from_json(ctx, parse_json_arg(elem_text, "--elem"));
    nhk::MembershipResult r = nhk::membership(u);
    if (r.ok()) {
      std::cout << (shared.json ? nhk::to_json(*r.element).dump()
                                : "member: " + r.element->str())
                << "\n";
      return 0;
    }
    if (shared.json) {
      Json j;
      j["member"] = false;
      j["witness"] = nhk::to_json(ctx, *r.witness);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "not a member; witness coefficient at "
                << nhk::to_json(r.witness->index).dump() << ": "
                << r.witness->coeff.str(ctx) << "\n";
    }
    return 1;
  }

  if (nh_verify->parsed()) {
    suite_opts.type = shared.type;
    suite_opts.parallel = !serial;
    if (!case_text.empty()) {
      Json j = parse_json_arg(case_text, "--case");
      nhk::SuiteOptions copts = suite_opts;
      if (j.contains("type")) copts.type = j["type"].get<std::string>();
      if (j.contains("seed")) copts.seed = j["seed"].get<uint64_t>();
      if (j.contains("max_length")) copts.max_length = j["max_length"].get<int>();
      if (j.contains("max_degree")) copts.max_degree = j["max_degree"].get<int>();
      if (j.contains("cases")) copts.cases = j["cases"].get<int>();
      nhk::CaseOutcome outcome = nhk::run_single_case(
          j.at("suite").get<std::string>(), j.at("id").get<std::string>(), copts);
      std::cout << (outcome.ok ? "case OK" : "case FAIL: " + outcome.message)
                << "\n";
      return outcome.ok ? 0 : 1;
    }
    if (suite_name.empty())
      throw CLI::ValidationError("verify", "need a suite name or --case");
    std::vector<std::string> names;
    if (suite_name == "all") {
      for (const auto& [name, builder] : nhk::suite_registry()) names.push_back(name);
    } else {
      names.push_back(suite_name);
    }
    bool all_ok = true;
    Json out = Json::array();
    for (const auto& name : names) {
      nhk::SuiteReport report = nhk::run_suite(name, suite_opts);
      all_ok = all_ok && report.ok();
      if (shared.json)
        out.push_back(report.to_json());
      else
        std::cout << report.human() << "\n";
    }
    if (shared.json) std::cout << out.dump(2) << "\n";
    return all_ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    // CLI11_PARSE already printed and returned, but rethrows land here.
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

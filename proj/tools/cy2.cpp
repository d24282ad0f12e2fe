#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cy2/cache.hpp"
#include "cy2/category.hpp"
#include "cy2/counting.hpp"
#include "cy2/hearts.hpp"
#include "cy2/render.hpp"
#include "cy2/serialize.hpp"
#include "cy2/torsion.hpp"
#include "cy2/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Common {
  std::string family = "A";
  int n = 1;
  int t = 1;
  unsigned workers = 1;
  std::string out;

  cy2::CategorySpec spec() const {
    cy2::CategorySpec s{cy2::parse_family(family), n, t};
    s.validate();
    return s;
  }
};

void add_spec(CLI::App* cmd, Common& c) {
  cmd->add_option("--family", c.family, "A or D")->required();
  cmd->add_option("--n", c.n, "n >= 1")->required();
  cmd->add_option("--t", c.t, "t >= 1")->required();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw cy2::InputError("cannot write " + path);
  f << text;
}

std::string dump(const cy2::Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion pairs in the finite 2-Calabi-Yau categories A_{n,t} and D_{n,t}"};
  app.require_subcommand(1);
  Common c;

  auto* build_cmd = app.add_subcommand("build", "Dump indecomposables and Ext/Hom tables");
  add_spec(build_cmd, c);
  build_cmd->add_option("--out", c.out, "Output file (default stdout)");

  bool hearts = false;
  bool brute = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "Write all torsion pairs as JSON");
  add_spec(enum_cmd, c);
  enum_cmd->add_option("--out", c.out, "Output file (default stdout)");
  enum_cmd->add_flag("--hearts", hearts, "Attach heart data to each record");
  enum_cmd->add_option("--workers", c.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  enum_cmd->add_flag("--brute-force", brute, "Use the exhaustive subset search");

  bool verify_count = false;
  auto* count_cmd = app.add_subcommand("count", "Closed-form count, optionally checked");
  add_spec(count_cmd, c);
  count_cmd->add_flag("--verify", verify_count, "Also enumerate and compare");
  count_cmd->add_option("--workers", c.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  count_cmd->add_flag("--brute-force", brute, "Enumerate with the exhaustive subset search");

  std::string set_text;
  std::string side = "right";
  long shift = 0;
  auto* perp_cmd = app.add_subcommand("perp", "Perpendicular category of a set");
  add_spec(perp_cmd, c);
  perp_cmd->add_option("--set", set_text, "Set in orbit-representative form, e.g. [[1,3]]")
      ->required();
  perp_cmd->add_option("--side", side, "right (Hom(X,-)=0) or left (Hom(-,X)=0)")
      ->check(CLI::IsMember({"right", "left"}));
  perp_cmd->add_option("--shift", shift, "Apply [k] to the result");

  auto* wings_cmd = app.add_subcommand("wings", "Wing decomposition of an all-rigid torsion half");
  add_spec(wings_cmd, c);
  wings_cmd->add_option("--set", set_text, "Torsion half in orbit-representative form")
      ->required();

  auto* hearts_cmd = app.add_subcommand("hearts", "Cores and heart data of torsion pairs");
  add_spec(hearts_cmd, c);
  hearts_cmd->add_option("--set", set_text, "Only the pair (X, X^perp) for this torsion half");
  hearts_cmd->add_option("--out", c.out, "Output file (default stdout)");
  hearts_cmd->add_option("--workers", c.workers, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* render_cmd = app.add_subcommand("render", "SVG drawing of the lift of a set");
  add_spec(render_cmd, c);
  render_cmd->add_option("--set", set_text, "Set in orbit-representative form (default empty)");
  render_cmd->add_option("--out", c.out, "Output file (default stdout)");

  bool details = false;
  int criterion = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance grid");
  verify_cmd->add_option("--workers", c.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  verify_cmd->add_flag("--details", details, "Show every check under its criterion");
  verify_cmd->add_option("--criterion", criterion, "Run only this criterion")
      ->check(CLI::Range(1, cy2::kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify_cmd) {
      cy2::VerifyOptions opts;
      opts.workers = c.workers;
      std::vector<cy2::CriterionResult> results;
      if (criterion > 0) {
        results.push_back(cy2::run_criterion(criterion, opts));
      } else {
        results = cy2::run_acceptance(opts);
      }
      std::cout << cy2::format_results(results, details);
      bool all = true;
      for (const auto& r : results) all = all && r.pass();
      return all ? kOk : kVerifyFailed;
    }

    const cy2::CategorySpec spec = c.spec();
    const cy2::EnumerateOptions eo{c.workers, brute};

    if (*count_cmd) {
      const cy2::CountReport r = cy2::count_report(spec, verify_count, eo);
      cy2::Json j = {{"spec", spec.name()}, {"formula", cy2::Json::parse(r.formula_value.str())}};
      if (r.enumerated_value) {
        j["enumerated"] = cy2::Json::parse(r.enumerated_value->str());
        j["agree"] = *r.agree;
      }
      std::cout << j.dump() << "\n";
      return r.agree.value_or(true) ? kOk : kVerifyFailed;
    }

    const cy2::CategoryTables tables = cy2::build(spec);

    if (*build_cmd) {
      emit(dump(cy2::tables_to_json(tables)), c.out);
    } else if (*enum_cmd) {
      std::vector<cy2::TorsionPairRecord> records;
      for (const cy2::IndecSet& x : cy2::enumerate_halves_cached(tables, eo)) {
        records.push_back(cy2::make_record(tables, x));
      }
      emit(dump(cy2::records_to_json(records, tables, hearts)), c.out);
    } else if (*perp_cmd) {
      const cy2::IndecSet x = cy2::parse_set(tables, set_text);
      cy2::IndecSet p = side == "right" ? tables.right_perp(x) : tables.left_perp(x);
      p = tables.shift(p, shift);
      cy2::Json j = {{"set", cy2::labels_json(tables, x)},
                     {"side", side},
                     {"shift", shift},
                     {"result", cy2::labels_json(tables, p)},
                     {"ids", cy2::ids_json(p)}};
      std::cout << dump(j);
    } else if (*wings_cmd) {
      const cy2::IndecSet x = cy2::parse_set(tables, set_text);
      cy2::Json j = cy2::Json::array();
      const cy2::WingDecomposition w = cy2::wing_decomposition(tables, x);
      for (const cy2::WingComponent& comp : w) {
        j.push_back({{"apex", cy2::label(tables.indec(comp.apex))},
                     {"members", cy2::labels_json(tables, comp.members)}});
      }
      std::cout << dump({{"wings", j}, {"separated", cy2::wings_separated(tables, w)}});
    } else if (*hearts_cmd) {
      cy2::Json j = cy2::Json::array();
      if (!set_text.empty()) {
        const cy2::IndecSet x = cy2::parse_set(tables, set_text);
        if (!cy2::is_torsion_half(tables, x)) {
          throw cy2::InputError("set is not a torsion half of " + spec.name());
        }
        const cy2::TorsionPairRecord r = cy2::make_record(tables, x);
        j.push_back(cy2::to_json(r, cy2::heart_report(r, tables)));
      } else {
        for (const cy2::IndecSet& x : cy2::enumerate_halves_cached(tables, eo)) {
          const cy2::TorsionPairRecord r = cy2::make_record(tables, x);
          j.push_back(cy2::to_json(r, cy2::heart_report(r, tables)));
        }
      }
      emit(dump(j), c.out);
    } else if (*render_cmd) {
      const cy2::IndecSet x =
          set_text.empty() ? tables.empty_set() : cy2::parse_set(tables, set_text);
      emit(spec.family == cy2::Family::A ? cy2::render_svg(tables.lift_a(x))
                                         : cy2::render_svg(tables.lift_d(x)),
           c.out);
    }
    return kOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

#include "nilalg/cli.hpp"

#include "nilalg/catalog.hpp"
#include "nilalg/cohomology.hpp"
#include "nilalg/deformation.hpp"
#include "nilalg/errors.hpp"
#include "nilalg/interchange.hpp"
#include "nilalg/lie.hpp"
#include "nilalg/operad.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <sstream>

namespace nilalg::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t samples = 16;
};

const char *true_false(bool b) { return b ? "true" : "false"; }

std::string dims_str(const std::vector<std::size_t> &d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i)
    s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

void print_json(std::ostream &out, const ojson &j) { out << j.dump(2) << "\n"; }

int cmd_verify(const std::string &file, const Options &o, std::ostream &out) {
  const StructureTensor g = read_tensor_file(file);
  const auto defects = jacobi_defect(g);
  ojson j;
  j["name"] = g.name();
  j["dim"] = g.dim();
  j["jacobi"] = defects.empty();
  if (!defects.empty()) {
    auto arr = ojson::array();
    for (const auto &d : defects)
      arr.push_back({d.triple[0] + 1, d.triple[1] + 1, d.triple[2] + 1});
    j["jacobi_failures"] = arr;
  } else {
    j["nilindex"] = nilindex(g);
    j["associative"] = check_associative(g);
    j["cubic_associative"] = check_cubic_associative(g);
    for (int i = 1; i <= 6; ++i)
      j["G" + std::to_string(i)] = check_Gi_associative(g, i);
    j["triple_total_associative"] = check_triple_total_associative(g);
  }
  if (o.json) {
    print_json(out, j);
  } else {
    for (const auto &[k, v] : j.items()) {
      if (k == "jacobi_failures") {
        out << "jacobi_failures";
        for (const auto &t : v)
          out << " (" << t[0] << "," << t[1] << "," << t[2] << ")";
        out << "\n";
      } else {
        out << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  }
  if (!defects.empty())
    throw NotLie("Jacobi identity fails on " + std::to_string(defects.size()) + " basis triple(s)");
  return 0;
}

int cmd_invariants(const std::string &file, const Options &o, std::ostream &out) {
  const StructureTensor g = read_tensor_file(file);
  const auto lcs = lower_central_series(g).dims;
  const auto nil = nilindex(g);
  const auto cs = characteristic_sequence(g, o.samples, o.seed);
  const auto der = derivations_dim(g);
  if (o.json) {
    ojson j;
    j["name"] = g.name();
    j["dim"] = g.dim();
    j["nilindex"] = nil;
    j["central_series"] = lcs;
    j["characteristic_sequence"] = cs.parts.parts;
    j["sampled"] = cs.sampled;
    j["derivations"] = der;
    print_json(out, j);
  } else {
    out << "name " << g.name() << "\n"
        << "dim " << g.dim() << "\n"
        << "nilindex " << nil << "\n"
        << "central_series " << dims_str(lcs) << "\n"
        << "characteristic_sequence " << cs.parts.str() << (cs.sampled ? " (sampled)" : "") << "\n"
        << "derivations " << der << "\n";
  }
  return 0;
}

int cmd_cohomology(const std::string &file, const Options &o, std::ostream &out) {
  const StructureTensor g = read_tensor_file(file);
  const auto r = cohomology_dims_hc(g);
  if (o.json) {
    ojson j;
    j["dimZ2"] = r.dimZ2;
    j["dimB2"] = r.dimB2;
    j["dimH2"] = r.dimH2;
    j["rigid"] = r.rigid_in_2nilp && r.two_step;
    print_json(out, j);
  } else {
    out << "dimZ2 " << r.dimZ2 << "\n"
        << "dimB2 " << r.dimB2 << "\n"
        << "dimH2 " << r.dimH2 << "\n";
    if (r.two_step)
      out << "certificate " << (r.rigid_in_2nilp ? "RigidIn2Nilp" : "Inconclusive") << "\n";
    else
      out << "certificate none (not 2-step; dimB2 counts B2 inside Z2)\n";
  }
  return 0;
}

int cmd_homology(const std::string &file, const Options &o, std::ostream &out) {
  const StructureTensor g = read_tensor_file(file);
  const auto m = ce_homology_dims(g);
  if (o.json) {
    print_json(out, ojson(m));
  } else {
    for (std::size_t i = 0; i < m.size(); ++i)
      out << (i ? " " : "") << m[i];
    out << "\n";
  }
  return 0;
}

int cmd_catalog_verify(const std::string &dir, const Options &o, std::ostream &out) {
  const auto entries = load_catalog(dir.empty() ? default_catalog_dir() : std::filesystem::path(dir));
  const auto reports = verify_catalog(entries, o.samples, o.seed);
  std::size_t passed = 0;
  ojson arr = ojson::array();
  for (const auto &r : reports) {
    passed += r.ok();
    if (o.json) {
      ojson j;
      j["name"] = r.name;
      j["dim"] = r.dim;
      j["expected_nilindex"] = r.expected_nilindex;
      j["jacobi"] = r.jacobi_ok;
      j["nilindex"] = r.nilindex ? ojson(*r.nilindex) : ojson(nullptr);
      j["nilindex_matches"] = r.nilindex_matches_expected;
      j["characteristic_sequence"] =
          r.characteristic_sequence ? ojson(r.characteristic_sequence->parts.parts) : ojson(nullptr);
      j["central_series"] = r.central_series;
      j["ok"] = r.ok();
      arr.push_back(std::move(j));
    } else {
      out << std::left << std::setw(18) << r.name << (r.ok() ? "ok  " : "FAIL") << " jacobi=" << true_false(r.jacobi_ok)
          << " nilindex=" << (r.nilindex ? std::to_string(*r.nilindex) : "-") << "/" << r.expected_nilindex
          << " c=" << (r.characteristic_sequence ? r.characteristic_sequence->parts.str() : "-")
          << " C=" << dims_str(r.central_series) << (r.error.empty() ? "" : " error=" + r.error) << "\n";
    }
  }
  if (o.json)
    print_json(out, arr);
  else
    out << passed << "/" << reports.size() << " entries verified\n";
  return passed == reports.size() ? 0 : 1;
}

int cmd_catalog_table(const std::string &dir, const Options &o, std::ostream &out) {
  const auto entries = load_catalog(dir.empty() ? default_catalog_dir() : std::filesystem::path(dir));
  const auto rows = invariant_table(entries, o.samples, o.seed);
  if (o.json) {
    ojson arr = ojson::array();
    for (const auto &r : rows) {
      ojson j;
      j["name"] = r.name;
      j["dim"] = r.dim;
      j["nilindex"] = r.nilindex ? ojson(*r.nilindex) : ojson(nullptr);
      j["characteristic_sequence"] =
          r.characteristic_sequence ? ojson(r.characteristic_sequence->parts) : ojson(nullptr);
      j["central_series"] = r.central_series;
      j["derivations"] = r.derivations ? ojson(*r.derivations) : ojson(nullptr);
      j["dimH2"] = r.dimH2 ? ojson(*r.dimH2) : ojson(nullptr);
      j["not_separated_from"] = r.not_separated_from;
      arr.push_back(std::move(j));
    }
    print_json(out, arr);
    return 0;
  }
  out << std::left << std::setw(18) << "name" << std::setw(4) << "dim" << std::setw(5) << "nil" << std::setw(14)
      << "c(g)" << std::setw(14) << "C^k dims" << std::setw(6) << "der" << std::setw(5) << "H2"
      << "not separated from\n";
  for (const auto &r : rows) {
    std::string seps;
    for (const auto &s : r.not_separated_from)
      seps += (seps.empty() ? "" : ",") + s;
    out << std::left << std::setw(18) << r.name << std::setw(4) << r.dim << std::setw(5)
        << (r.nilindex ? std::to_string(*r.nilindex) : "-") << std::setw(14)
        << (r.characteristic_sequence ? r.characteristic_sequence->str() : "-") << std::setw(14)
        << (r.central_series.empty() ? "-" : dims_str(r.central_series)) << std::setw(6)
        << (r.derivations ? std::to_string(*r.derivations) : "-") << std::setw(5)
        << (r.dimH2 ? std::to_string(*r.dimH2) : "-") << seps << "\n";
  }
  return 0;
}

int cmd_dual_dims(std::size_t kmax, const Options &o, std::ostream &out) {
  const auto d = dual_dims(kmax);
  if (o.json) {
    ojson arr = ojson::array();
    for (const auto &x : d)
      arr.push_back(x.get_str());
    print_json(out, arr);
  } else {
    for (std::size_t i = 0; i < d.size(); ++i)
      out << (i ? " " : "") << d[i].get_str();
    out << "\n";
  }
  return 0;
}

int cmd_koszul(std::size_t order, const Options &o, std::ostream &out) {
  const bool ok = koszul_check(gen_function_2nilp(std::max<std::size_t>(order, 2)), dual_series(order), order);
  if (o.json)
    print_json(out, ojson{{"order", order}, {"holds", ok}});
  else
    out << "koszul " << true_false(ok) << " (order " << order << ")\n";
  return ok ? 0 : 1;
}

int cmd_cubic(const Options &o, std::ostream &out) {
  const auto c = cubic_operad_dims();
  const auto g4 = free_operad_dims(Generator::OneDim, 4);
  if (o.json) {
    print_json(out, ojson{{"asscubic4", c.asscubic4},
                          {"jordan_relation4", c.jordan_relation4},
                          {"jord4", c.jord4},
                          {"free_one_dim4", g4.get_ui()}});
  } else {
    out << "asscubic4 " << c.asscubic4 << "\n"
        << "jordan_relation4 " << c.jordan_relation4 << "\n"
        << "jord4 " << c.jord4 << "\n"
        << "free_one_dim4 " << g4.get_str() << "\n";
  }
  return 0;
}

ojson conditions_json(const DeformationConditions &c) {
  return ojson{{"phi_square_zero", c.phi_square_zero},
               {"delta_h_zero", c.delta_h_zero},
               {"delta_c_zero", c.delta_c_zero},
               {"stays_2step", c.stays_2step},
               {"direct_2step", c.direct_2step}};
}

void print_conditions(std::ostream &out, const DeformationConditions &c) {
  const ojson j = conditions_json(c);
  for (const auto &[k, v] : j.items())
    out << k << " " << true_false(v.get<bool>()) << "\n";
}

StructureTensor cochain_as_tensor(const AlternatingCochain &phi, const std::string &name) {
  TensorBuilder b(phi.dim());
  for (const auto &t : increasing_tuples(phi.dim(), 2))
    b.add(t[0], t[1], phi.value(t));
  return b.build(name);
}

int cmd_deform_extract(const std::string &file, const Options &o, std::ostream &out) {
  const StructureTensor g = read_tensor_file(file);
  const auto r = extract_deformation_maximal(g, o.samples, o.seed);
  const auto cond = deformation_conditions({r.model, r.phi, Rational(1)});
  const StructureTensor phi_t = cochain_as_tensor(r.phi, "phi");
  if (o.json) {
    ojson j;
    j["model"] = r.model.name();
    ojson p = ojson::array();
    for (std::size_t i = 0; i < r.basis_change.rows(); ++i) {
      ojson row = ojson::array();
      for (std::size_t c = 0; c < r.basis_change.cols(); ++c)
        row.push_back(r.basis_change(i, c).str());
      p.push_back(std::move(row));
    }
    j["basis_change"] = std::move(p);
    j["phi"] = tensor_to_json(phi_t);
    j["conditions"] = conditions_json(cond);
    print_json(out, j);
  } else {
    out << "model " << r.model.name() << "\n";
    out << "basis_change (columns are new basis vectors)\n";
    for (std::size_t i = 0; i < r.basis_change.rows(); ++i) {
      out << " ";
      for (std::size_t c = 0; c < r.basis_change.cols(); ++c)
        out << " " << std::setw(5) << std::right << r.basis_change(i, c).str();
      out << "\n";
    }
    out << "phi";
    if (r.phi.is_zero())
      out << " 0";
    out << "\n";
    for (const auto &b : phi_t.brackets()) {
      out << "  phi(X" << b.i << ",X" << b.j << ") =";
      for (const auto &t : b.rhs)
        out << " " << t.c.str() << "*X" << t.k;
      out << "\n";
    }
    print_conditions(out, cond);
  }
  return cond.stays_2step && cond.direct_2step ? 0 : 1;
}

int cmd_deform_check(const std::string &base_file, const std::string &phi_file, const std::string &t,
                     const Options &o, std::ostream &out) {
  const StructureTensor base = read_tensor_file(base_file);
  const StructureTensor phi_t = read_tensor_file(phi_file);
  if (phi_t.dim() != base.dim())
    throw DimensionMismatch("phi and base have different dimensions");
  const DeformationProblem d{base, difference_cochain(phi_t, StructureTensor(base.dim())), Rational::parse(t)};
  const auto cond = deformation_conditions(d);
  const StructureTensor mu = linear_deformation(d).renamed(base.name().empty() ? "" : base.name() + "+t*phi");
  if (o.json) {
    ojson j;
    j["t"] = d.t.str();
    j["conditions"] = conditions_json(cond);
    j["deformation"] = tensor_to_json(mu);
    print_json(out, j);
  } else {
    out << "t " << d.t.str() << "\n";
    print_conditions(out, cond);
  }
  if (cond.stays_2step != cond.direct_2step)
    throw std::logic_error("deformation conditions disagree with the direct nilindex check");
  return cond.stays_2step ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact computations for nilpotent Lie algebras", "nilcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--seed", o.seed, "Seed for characteristic-sequence sampling")->capture_default_str();
  app.add_option("--samples", o.samples, "Random samples for characteristic sequences")->capture_default_str();

  std::string file, file2, data_dir, t = "1";
  std::size_t kmax = 6, order = 12;
  bool all = false;
  std::function<int()> action;

  auto *verify = app.add_subcommand("verify", "Jacobi, nilindex and associativity-family checks");
  verify->add_option("file", file, "Algebra JSON")->required();
  verify->callback([&] { action = [&] { return cmd_verify(file, o, out); }; });

  auto *inv = app.add_subcommand("invariants", "Characteristic sequence and central series");
  inv->add_option("file", file, "Algebra JSON")->required();
  inv->callback([&] { action = [&] { return cmd_invariants(file, o, out); }; });

  auto *coh = app.add_subcommand("cohomology", "dim Z2, B2, H2 of the mixed complex and rigidity");
  coh->add_option("file", file, "Algebra JSON")->required();
  coh->callback([&] { action = [&] { return cmd_cohomology(file, o, out); }; });

  auto *hom = app.add_subcommand("homology", "Chevalley-Eilenberg homology dimensions m_0..m_n");
  hom->add_option("file", file, "Algebra JSON")->required();
  hom->callback([&] { action = [&] { return cmd_homology(file, o, out); }; });

  auto *cat = app.add_subcommand("catalog", "Bundled classification lists");
  cat->require_subcommand(1);
  cat->add_option("--data-dir", data_dir, "Catalog directory");
  auto *cat_verify = cat->add_subcommand("verify", "Verify catalog entries");
  cat_verify->add_flag("--all", all, "Verify every entry")->required();
  cat_verify->callback([&] { action = [&] { return cmd_catalog_verify(data_dir, o, out); }; });
  auto *cat_table = cat->add_subcommand("table", "Invariant table");
  cat_table->callback([&] { action = [&] { return cmd_catalog_table(data_dir, o, out); }; });

  auto *op = app.add_subcommand("operad", "Operad dimension computations");
  op->require_subcommand(1);
  auto *dd = op->add_subcommand("dual-dims", "d_1..d_kmax");
  dd->add_option("--kmax", kmax, "Largest arity")->required()->check(CLI::Range(2, 200));
  dd->callback([&] { action = [&] { return cmd_dual_dims(kmax, o, out); }; });
  auto *kc = op->add_subcommand("koszul-check", "Functional equation for x + x^2/2");
  kc->add_option("--order", order, "Truncation order")->required()->check(CLI::Range(1, 200));
  kc->callback([&] { action = [&] { return cmd_koszul(order, o, out); }; });
  auto *cd = op->add_subcommand("cubic-dims", "AssCubic(4), Jordan relation and Jord(4) dimensions");
  cd->callback([&] { action = [&] { return cmd_cubic(o, out); }; });

  auto *def = app.add_subcommand("deform", "Linear deformations");
  def->require_subcommand(1);
  auto *ex = def->add_subcommand("extract", "Normal form as a deformation of k_{2p+1} or k_{2p}");
  ex->add_option("file", file, "Algebra JSON")->required();
  ex->callback([&] { action = [&] { return cmd_deform_extract(file, o, out); }; });
  auto *chk = def->add_subcommand("check", "Deformation conditions for base + t*phi");
  chk->add_option("base", file, "Base algebra JSON")->required();
  chk->add_option("phi", file2, "phi in the algebra interchange format")->required();
  chk->add_option("--t", t, "Deformation parameter p/q")->capture_default_str();
  chk->callback([&] { action = [&] { return cmd_deform_check(file, file2, t, o, out); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const ParseError &e) {
    err << "error: ParseError: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace nilalg::cli

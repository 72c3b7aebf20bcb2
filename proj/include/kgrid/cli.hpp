#pragma once

// Command-line driver. Exit codes: 0 success / isomorphic, 1 negative result
// (not isomorphic, failed verification, not liftable), 2 indeterminate,
// 64 malformed input, 65 unsupported parameter range.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kgrid/cartan.hpp"
#include "kgrid/error.hpp"
#include "kgrid/grids.hpp"
#include "kgrid/invariant.hpp"
#include "kgrid/io.hpp"
#include "kgrid/ktheory.hpp"
#include "kgrid/tro.hpp"

namespace kgrid::cli {

enum ExitCode : int {
  ok = 0,
  negative = 1,
  indeterminate = 2,
  usage = 64,
  unsupported = 65,
};

struct TableRange {
  std::size_t rect_max = 5;
  std::size_t rank_one_max = 7;
  std::size_t symplectic_max = 8;
  std::size_t hermitian_max = 8;
  std::size_t spin_min = 4;
  std::size_t spin_max = 9;
};

inline std::string format_class(const K0Class& c) {
  if (c.size() == 1) return std::to_string(c.ranks[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c.ranks[i]);
  return s + ")";
}

inline std::string format_set(const ClassSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + format_class(s[i]);
  return out + "}";
}

inline std::string format_caps(const std::vector<std::int64_t>& caps) {
  std::string s = "(";
  for (std::size_t i = 0; i < caps.size(); ++i) s += (i ? "," : "") + std::to_string(caps[i]);
  return s + ")";
}

/// Enveloping TRO of the classical part of a spec, in canonical factor order.
inline std::string enveloping_string(const TripleSpec& spec) {
  std::string s;
  for (const auto& d : canonicalize(spec).factors) {
    if (d.is_exceptional()) continue;
    s += (s.empty() ? "" : "+") + enveloping_tro(d).to_string();
  }
  return s.empty() ? "0" : s;
}

/// Catalog rows of the invariant table for a range configuration.
inline std::vector<CartanDescriptor> table_factors(const TableRange& r) {
  std::vector<CartanDescriptor> out;
  for (std::size_t n = 2; n <= r.rect_max; ++n)
    for (std::size_t m = 2; m <= r.rect_max; ++m) out.push_back(CartanDescriptor::rectangular(n, m));
  for (std::size_t n = 1; n <= r.rank_one_max; ++n) out.push_back(CartanDescriptor::rectangular(1, n));
  for (std::size_t n = 5; n <= r.symplectic_max; ++n) out.push_back(CartanDescriptor::symplectic(n));
  for (std::size_t n = 2; n <= r.hermitian_max; ++n) out.push_back(CartanDescriptor::hermitian(n));
  for (std::size_t d = std::max<std::size_t>(r.spin_min, 4); d <= r.spin_max; ++d)
    out.push_back(CartanDescriptor::spin(d));
  out.push_back(CartanDescriptor::exceptional_v());
  out.push_back(CartanDescriptor::exceptional_vi());
  return out;
}

struct TableRow {
  std::string factor;
  std::string tro;
  std::string left;
  std::string right;
  std::string computed;
  std::string published;
  bool agree = true;
};

inline TableRow table_row(const CartanDescriptor& d) {
  if (d.is_exceptional()) return {d.to_string(), "0", "()", "()", "{}", "{}", true};
  const TroSpace t = enveloping_tro(d);
  const DoubleScaledGroup g = double_scaled_group(t);
  const ClassSet computed = gamma(d);
  const ClassSet published = *published_gamma(d);
  return {d.to_string(),        t.to_string(),          format_caps(g.left_caps()),
          format_caps(g.right_caps()), format_set(computed), format_set(published),
          computed == published};
}

inline void print_table(const std::vector<TableRow>& rows, std::ostream& out) {
  const std::vector<std::string> header{"factor", "T*(Z)", "left caps", "right caps",
                                        "gamma (computed)", "gamma (published)", "agree"};
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  auto cells = [](const TableRow& r) {
    return std::vector<std::string>{r.factor, r.tro, r.left, r.right, r.computed, r.published,
                                    r.agree ? "yes" : "NO"};
  };
  for (const auto& r : rows) {
    const auto cs = cells(r);
    for (std::size_t c = 0; c < cs.size(); ++c) width[c] = std::max(width[c], cs[c].size());
  }
  auto line = [&](const std::vector<std::string>& cs) {
    for (std::size_t c = 0; c < cs.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(width[c])) << cs[c];
      out << (c + 1 < cs.size() ? "  " : "\n");
    }
  };
  line(header);
  for (const auto& r : rows) line(cells(r));
}

inline int run_invariant(const std::string& text, bool as_json, bool quiet, std::ostream& out) {
  const TripleSpec spec = TripleSpec::parse(text);
  const KGridInvariant inv = k_grid_invariant(spec);
  const auto diffs = table_diffs(spec);
  if (quiet) return ok;
  if (as_json) {
    io::json j = io::to_json(inv, diffs);
    j["spec"] = canonicalize(spec).to_string();
    j["enveloping_tro"] = enveloping_string(spec);
    out << j.dump(2) << "\n";
    return ok;
  }
  out << "spec               " << canonicalize(spec).to_string() << "\n"
      << "enveloping TRO     " << enveloping_string(spec) << "\n"
      << "k                  " << inv.group.k() << "\n"
      << "left caps          " << format_caps(inv.group.left_caps()) << "\n"
      << "right caps         " << format_caps(inv.group.right_caps()) << "\n"
      << "gamma              " << format_set(inv.gamma) << "\n"
      << "exceptional count  " << inv.exceptional_count << "\n";
  for (const auto& d : diffs)
    out << "note: " << d.factor << " computed gamma " << format_set(d.computed)
        << " differs from published " << format_set(d.published) << "\n";
  return ok;
}

inline int run_classify(const std::string& a, const std::string& b, bool as_json, bool quiet,
                        std::ostream& out) {
  const Verdict v = classify(TripleSpec::parse(a), TripleSpec::parse(b));
  if (!quiet) {
    if (as_json) {
      out << io::to_json(v).dump(2) << "\n";
    } else {
      out << to_string(v.outcome) << "\n" << "reason: " << v.reason << "\n";
      if (v.witness && !v.witness->empty()) {
        out << "witness:";
        for (std::size_t j : *v.witness) out << " " << j;
        out << "\n";
      }
    }
  }
  switch (v.outcome) {
    case Outcome::isomorphic: return ok;
    case Outcome::not_isomorphic: return negative;
    case Outcome::indeterminate: return indeterminate;
  }
  return negative;
}

inline int run_verify(const std::string& text, bool as_json, bool quiet, std::ostream& out) {
  const TripleSpec spec = TripleSpec::parse(text);
  io::json reports = io::json::array();
  bool all = true;
  std::ostringstream human;
  for (const auto& d : spec.factors) {
    if (d.is_exceptional()) {
      human << d.to_string() << ": exceptional, no explicit grid\n";
      continue;
    }
    const Grid g = factor_grid(d);
    const GridReport r = verify_grid(g);
    all = all && r.passed();
    reports.push_back(io::to_json(r));
    auto pf = [](bool b) { return b ? "pass" : "FAIL"; };
    human << r.factor << ": " << to_string(r.kind) << " grid, " << r.elements.size() << " elements\n";
    human << "  tripotency       " << pf(r.all_tripotent()) << "\n";
    human << "  span             " << r.span_dim << "/" << r.expected_dim << " "
          << pf(r.span_dim == r.expected_dim && r.spans_factor) << "\n";
    std::string non_minimal;
    for (const auto& e : r.elements)
      if (!e.minimal) non_minimal += (non_minimal.empty() ? "" : ",") + e.label;
    human << "  minimality       " << pf(r.minimality_as_expected());
    if (!non_minimal.empty()) human << " (non-minimal: " << non_minimal << ")";
    human << "\n";
    std::size_t spin_rel = 0, spin_rel_failed = 0;
    for (const auto& c : r.identities) {
      if (c.name.rfind("spin relation", 0) == 0) {
        ++spin_rel;
        if (!c.passed) ++spin_rel_failed;
      } else {
        human << "  " << c.name << "  " << pf(c.passed) << "\n";
      }
    }
    if (spin_rel) human << "  spin relations   " << pf(spin_rel_failed == 0) << " (" << spin_rel << " identities)\n";
  }
  if (!quiet) out << (as_json ? reports.dump(2) + "\n" : human.str());
  return all ? ok : negative;
}

inline int run_lift(const std::string& file, const std::string& source, const std::string& target,
                    bool as_json, bool quiet, std::ostream& out, std::ostream& err) {
  std::ifstream in(file);
  if (!in) {
    err << "error: cannot open " << file << "\n";
    return usage;
  }
  io::json j;
  try {
    j = io::json::parse(in);
  } catch (const io::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + file, e.byte);
  }
  const IntMatrix alpha = io::int_matrix_from_json(j);
  const TroSpace src = TroSpace::parse(source);
  const TroSpace dst = TroSpace::parse(target);
  try {
    const TroHom h = lift_hom(alpha, src, dst);
    if (!quiet) {
      if (as_json) {
        out << io::to_json(h).dump(2) << "\n";
      } else {
        out << "liftable: " << src.to_string() << " -> " << dst.to_string() << "\n";
        for (std::size_t k = 0; k < dst.size(); ++k) {
          out << "  target " << k << " " << "M(" << dst[k].rows << "," << dst[k].cols << ") <- ";
          bool any = false;
          for (std::size_t i = 0; i < src.size(); ++i) {
            if (h.mult()(k, i) == 0) continue;
            out << (any ? " + " : "") << h.mult()(k, i) << " x M(" << src[i].rows << "," << src[i].cols << ")";
            any = true;
          }
          out << (any ? "" : "0") << "\n";
        }
      }
    }
    return ok;
  } catch (const NotLiftableError& e) {
    if (!quiet) {
      if (as_json)
        out << io::json{{"liftable", false},
                        {"target_summand", e.target_summand()},
                        {"side", e.side() == ScaleSide::left ? "left" : "right"},
                        {"message", e.what()}}
                   .dump(2)
            << "\n";
      else
        out << "not liftable: " << e.what() << "\n";
    }
    return negative;
  } catch (const NotPositiveError& e) {
    if (!quiet) out << "not positive: " << e.what() << "\n";
    return negative;
  }
}

inline int run_table(const TableRange& range, bool as_json, bool quiet, std::ostream& out) {
  std::vector<TableRow> rows;
  for (const auto& d : table_factors(range)) rows.push_back(table_row(d));
  if (quiet) return ok;
  if (as_json) {
    io::json a = io::json::array();
    for (const auto& r : rows)
      a.push_back({{"factor", r.factor},
                   {"enveloping_tro", r.tro},
                   {"left", r.left},
                   {"right", r.right},
                   {"gamma_computed", r.computed},
                   {"gamma_published", r.published},
                   {"agree", r.agree}});
    out << a.dump(2) << "\n";
  } else {
    print_table(rows, out);
  }
  return ok;
}

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"K-theoretic invariants of finite-dimensional JC*-triples", "kgrid"};
  app.require_subcommand(1);
  bool as_json = false;
  bool quiet = false;
  app.add_flag("--json", as_json, "emit JSON");
  app.add_flag("-q,--quiet", quiet, "suppress output; only the exit code reports");

  std::string spec_a, spec_b, file, source, target;
  auto* invariant = app.add_subcommand("invariant", "K-grid invariant of a factor spec");
  invariant->add_option("spec", spec_a, "e.g. \"I(2,3)+IV(6)\"")->required();
  auto* classify_cmd = app.add_subcommand("classify", "decide isomorphism of two specs");
  classify_cmd->add_option("first", spec_a)->required();
  classify_cmd->add_option("second", spec_b)->required();
  auto* verify = app.add_subcommand("verify", "construct and check the grids of a spec");
  verify->add_option("spec", spec_a)->required();
  auto* lift = app.add_subcommand("lift", "lift a multiplicity matrix to a TRO-homomorphism");
  lift->add_option("matrix-file", file, "JSON matrix of nonnegative integers")->required();
  lift->add_option("source", source, "e.g. \"M(1,1)+M(2,1)\"")->required();
  lift->add_option("target", target)->required();
  TableRange range;
  auto* table = app.add_subcommand("table", "invariant table over a parameter range");
  table->add_option("--rect-max", range.rect_max, "I(n,m) for 2 <= n,m <= N");
  table->add_option("--rank-one-max", range.rank_one_max, "I(1,n) for n <= N");
  table->add_option("--symplectic-max", range.symplectic_max, "II(n) for 5 <= n <= N");
  table->add_option("--hermitian-max", range.hermitian_max, "III(n) for 2 <= n <= N");
  table->add_option("--spin-min", range.spin_min, "IV(d) for d >= N (at least 4)");
  table->add_option("--spin-max", range.spin_max, "IV(d) for d <= N");
  for (auto* sub : {invariant, classify_cmd, verify, lift, table}) {
    sub->add_flag("--json", as_json, "emit JSON");
    sub->add_flag("-q,--quiet", quiet, "suppress output");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage;
  }

  try {
    if (*invariant) return run_invariant(spec_a, as_json, quiet, out);
    if (*classify_cmd) return run_classify(spec_a, spec_b, as_json, quiet, out);
    if (*verify) return run_verify(spec_a, as_json, quiet, out);
    if (*lift) return run_lift(file, source, target, as_json, quiet, out, err);
    if (*table) return run_table(range, as_json, quiet, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return unsupported;
  } catch (const DimensionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return usage;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid JSON: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return negative;
  }
  return usage;
}

}  // namespace kgrid::cli

#include "hstrata/render.hpp"

#include <sstream>

#include "hstrata/invariants.hpp"
#include "hstrata/strata.hpp"
#include "json.hpp"

namespace hstrata {

namespace {

using nlohmann::ordered_json;

std::string seq_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

ordered_json stratum_json(const StratumDescriptor& s) {
  ordered_json o;
  o["lambda"] = s.lambda.parts();
  o["c"] = s.c;
  o["tau"] = s.tau;
  o["tail"] = s.tail.values();
  o["lambda_conj"] = s.lambda.conjugate().parts();
  o["D"] = s.D.parts();
  o["dim"] = s.dim_stratum;
  o["cod_in_G"] = s.cod_in_G;
  o["cod_in_tau"] = s.cod_in_tau;
  return o;
}

std::optional<std::vector<bool>> star_flags(const StrataPoset& poset,
                                            const std::optional<StarMark>& star) {
  if (!star) return std::nullopt;
  HilbertTail ref = tail_from_lambda(star->lambda, star->c, poset.j, poset.d);
  int idx = poset.index_of(ref);
  if (idx < 0) throw std::invalid_argument("star stratum is not an admissible stratum of (j, d)");
  std::vector<bool> flags(poset.strata.size(), false);
  for (int u : poset.closure_set(idx)) flags[static_cast<std::size_t>(u)] = true;
  return flags;
}

}  // namespace

std::string enumerate_csv(int j, int d, const std::optional<StarMark>& star) {
  auto poset = build_poset(j, d);
  auto flags = star_flags(poset, star);
  std::ostringstream out;
  out << "lambda,c,tau,tail,lambda_conj,dim,cod";
  if (flags) out << ",star";
  out << "\n";
  for (std::size_t i = 0; i < poset.strata.size(); ++i) {
    const auto& s = poset.strata[i];
    out << '"' << s.lambda.to_string() << '"' << ',' << s.c << ',' << s.tau << ',' << '"'
        << s.tail.to_string() << '"' << ',' << '"' << s.lambda.conjugate().to_string() << '"'
        << ',' << s.dim_stratum << ',' << s.cod_in_G;
    if (flags) out << ',' << ((*flags)[i] ? "*" : "");
    out << "\n";
  }
  return out.str();
}

std::string enumerate_json(int j, int d, const std::optional<StarMark>& star) {
  auto poset = build_poset(j, d);
  auto flags = star_flags(poset, star);
  ordered_json o;
  o["j"] = j;
  o["d"] = d;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < poset.strata.size(); ++i) {
    ordered_json r = stratum_json(poset.strata[i]);
    if (flags) r["star"] = static_cast<bool>((*flags)[i]);
    rows.push_back(std::move(r));
  }
  o["strata"] = std::move(rows);
  return o.dump(2) + "\n";
}

std::string nose_csv(int j, int d) {
  auto rows = nose_strata(j, d);
  std::ostringstream out;
  out << "A,tau,c,N,anc_dims,A_conj,dim\n";
  for (const auto& r : rows) {
    std::vector<int> nw(r.N.end() - std::min<std::size_t>(r.N.size(), static_cast<std::size_t>(d)),
                        r.N.end());
    std::vector<int> aw(r.ancestor_dims.end() -
                            std::min<std::size_t>(r.ancestor_dims.size(), static_cast<std::size_t>(d)),
                        r.ancestor_dims.end());
    out << '"' << r.A.to_string() << '"' << ',' << r.tau << ',' << r.c << ',' << '"'
        << seq_string(nw) << '"' << ',' << '"' << seq_string(aw) << '"' << ',' << '"'
        << r.A.conjugate().to_string() << '"' << ',' << r.dim_stratum << "\n";
  }
  return out.str();
}

std::string nose_json(int j, int d) {
  auto rows = nose_strata(j, d);
  ordered_json o;
  o["j"] = j;
  o["d"] = d;
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json e;
    e["A"] = r.A.parts();
    e["tau"] = r.tau;
    e["c"] = r.c;
    e["N"] = r.N;
    e["ancestor_dims"] = r.ancestor_dims;
    e["A_conj"] = r.A.conjugate().parts();
    e["dim"] = r.dim_stratum;
    e["cod_in_tau"] = r.cod_in_tau;
    arr.push_back(std::move(e));
  }
  o["strata"] = std::move(arr);
  return o.dump(2) + "\n";
}

std::string poset_dot(int j, int d) {
  auto poset = build_poset(j, d);
  std::ostringstream out;
  out << "digraph strata {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < poset.strata.size(); ++i) {
    const auto& s = poset.strata[i];
    out << "  n" << i << " [label=\"" << s.lambda.to_string() << " | " << s.tail.to_string()
        << " | " << s.dim_stratum << "\"];\n";
  }
  for (auto [a, b] : poset.hasse) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string poset_json(int j, int d) {
  auto poset = build_poset(j, d);
  ordered_json o;
  o["j"] = j;
  o["d"] = d;
  ordered_json nodes = ordered_json::array();
  for (std::size_t i = 0; i < poset.strata.size(); ++i) {
    ordered_json n = stratum_json(poset.strata[i]);
    n["index"] = i;
    n["closure"] = poset.closure_set(static_cast<int>(i));
    nodes.push_back(std::move(n));
  }
  o["strata"] = std::move(nodes);
  ordered_json covers = ordered_json::array();
  for (auto [a, b] : poset.hasse) covers.push_back(ordered_json::array({a, b}));
  o["covers"] = std::move(covers);
  return o.dump(2) + "\n";
}

namespace {

template <class F>
ordered_json report_body(const FormSpace<F>& v) {
  auto tail = hilbert_tail(v);
  auto [lam, c] = lambda_of(tail);
  auto stratum = make_stratum(v.j(), v.dim(), lam, c);
  auto mb = mu_basis(v);
  auto nr = nose(v);

  ordered_json o;
  o["j"] = v.j();
  o["d"] = v.dim();
  o["c"] = c;
  o["tau"] = stratum.tau;
  o["lambda"] = lam.parts();
  o["D"] = stratum.D.parts();
  o["tail"] = tail.values();
  o["lambda_conj"] = lam.conjugate().parts();
  o["dim_stratum"] = stratum.dim_stratum;
  o["cod_in_G"] = stratum.cod_in_G;
  o["cod_in_tau"] = stratum.cod_in_tau;
  o["mu_degrees"] = mb.col_degrees.parts();
  ordered_json nose_o;
  nose_o["N"] = nr.N;
  nose_o["A"] = nr.A.parts();
  nose_o["ancestor_dims"] = nr.ancestor_dims;
  o["nose"] = std::move(nose_o);
  return o;
}

}  // namespace

std::string analyze_report(const FormSpaceDocument& doc) {
  ordered_json o;
  if (doc.modular()) {
    o = report_body(doc.gf_space());
    o["field"] = ordered_json{{"prime", doc.prime()}};
  } else {
    o = report_body(doc.qq_space());
    o["field"] = "rational";
  }
  // echo of the parsed input
  ordered_json echo = ordered_json::parse(doc.serialize());
  o["forms"] = echo["forms"];
  return o.dump(2) + "\n";
}

}  // namespace hstrata

#include "xover/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace xover {

using nlohmann::json;

namespace {

std::vector<std::vector<int>> read_int_table(std::istream& in) {
  std::vector<std::vector<int>> table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    if (first && line.find('p') != std::string::npos) {
      first = false;  // header row p1,...,pk
      continue;
    }
    first = false;
    std::vector<int> row;
    std::string tok;
    std::istringstream is(line);
    while (std::getline(is, tok, ',')) {
      if (tok.find_first_not_of(" \t\r") == std::string::npos) continue;
      row.push_back(std::stoi(tok));
    }
    if (!row.empty()) table.push_back(std::move(row));
  }
  if (table.empty()) throw std::runtime_error("design csv: no data rows");
  for (const auto& r : table)
    if (r.size() != table.front().size())
      throw std::runtime_error("design csv: ragged rows");
  return table;
}

}  // namespace

ExactDesign read_design_csv(std::istream& in, int t, bool transposed) {
  auto table = read_int_table(in);
  if (transposed) {
    std::vector<std::vector<int>> flipped(table.front().size(),
                                          std::vector<int>(table.size()));
    for (size_t i = 0; i < table.size(); ++i)
      for (size_t j = 0; j < table[i].size(); ++j) flipped[j][i] = table[i][j];
    table = std::move(flipped);
  }
  std::vector<TreatmentSequence> rows;
  rows.reserve(table.size());
  for (auto& r : table) rows.emplace_back(std::move(r), t);
  return ExactDesign(std::move(rows));
}

ExactDesign read_design_csv_file(const std::string& path, int t, bool transposed) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_design_csv(f, t, transposed);
}

void write_design_csv(std::ostream& out, const ExactDesign& d, bool transposed,
                      bool header) {
  if (!transposed) {
    if (header) {
      for (int j = 1; j <= d.k(); ++j) out << (j > 1 ? "," : "") << 'p' << j;
      out << '\n';
    }
    for (const auto& r : d.rows) {
      for (int j = 1; j <= d.k(); ++j) out << (j > 1 ? "," : "") << r.at(j);
      out << '\n';
    }
  } else {
    for (int j = 1; j <= d.k(); ++j) {
      for (int i = 1; i <= d.n(); ++i) out << (i > 1 ? "," : "") << d.label(i, j);
      out << '\n';
    }
  }
}

ApproximateDesign read_approximate_json(std::istream& in) {
  json j;
  in >> j;
  int t = j.at("t").get<int>();
  int k = j.at("k").get<int>();
  std::map<TreatmentSequence, double> props;
  for (const auto& [key, val] : j.at("proportions").items()) {
    TreatmentSequence s = parse_sequence(key, t);
    if (s.k() != k) throw std::runtime_error("approximate json: wrong length for " + key);
    props[s] += val.get<double>();
  }
  double n = j.value("n", 1.0);
  return ApproximateDesign(std::move(props), n);
}

ApproximateDesign read_approximate_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_approximate_json(f);
}

void write_approximate_json(std::ostream& out, const ApproximateDesign& d) {
  json j;
  j["k"] = d.k;
  j["t"] = d.t;
  if (d.nominal_n != 1.0) j["n"] = d.nominal_n;
  json props = json::object();
  for (const auto& [s, p] : d.proportions) props[s.str()] = p;
  j["proportions"] = std::move(props);
  out << j.dump(2) << '\n';
}

std::string solution_to_json(const MaximinSolution& sol) {
  json j;
  j["k"] = sol.k;
  j["t"] = sol.t;
  j["gamma_star"] = std::vector<double>(sol.gamma_star.v.data(),
                                        sol.gamma_star.v.data() + 5);
  j["h_star"] = sol.h_star;

  json active = json::array();
  for (size_t i = 0; i < sol.active.size(); ++i) {
    json a;
    a["class"] = sol.active[i].first.str();
    a["proportion"] = sol.active[i].second;
    if (sol.exact && sol.exact->verified && i < sol.exact->proportions.size())
      a["proportion_exact"] = rat_str(sol.exact->proportions[i].second);
    active.push_back(std::move(a));
  }
  j["active"] = std::move(active);

  j["certificate"] = {
      {"max_inactive_gap", sol.certificate.max_inactive_gap},
      {"kkt_residual", sol.certificate.kkt_residual},
      {"min_proportion", sol.certificate.min_proportion},
      {"resolve_gap", sol.certificate.resolve_gap},
      {"passed", sol.certificate.passed()},
  };
  if (!sol.certificate.passed()) j["certificate"]["failure"] = sol.certificate.failure;
  j["degeneracy_dim"] = sol.proportions.degeneracy_dim;

  if (sol.exact) {
    json e;
    e["verified"] = sol.exact->verified;
    if (sol.exact->verified) {
      e["h_star"] = rat_str(sol.exact->h_star);
      std::vector<std::string> g;
      for (const auto& r : sol.exact->gamma) g.push_back(rat_str(r));
      e["gamma_star"] = g;
    }
    j["exact"] = std::move(e);
  }

  j["settings"] = {
      {"active_rtol", sol.settings.active_rtol},
      {"gap_rtol", sol.settings.gap_rtol},
      {"kkt_tol", sol.settings.kkt_tol},
      {"max_iters", sol.settings.max_iters},
      {"den_cap", sol.settings.den_cap},
      {"rational", sol.settings.want_exact},
  };
  return j.dump(2);
}

std::string construction_sidecar_json(const StartingDesign& sd,
                                      const EquivalenceClass& pattern) {
  json j;
  j["method"] = sd.method;
  j["t"] = sd.t;
  j["subjects"] = sd.triplets.size();
  j["pattern"] = pattern.str();
  if (sd.method == "gf") {
    j["seed_triplet"] = {sd.seed[0], sd.seed[1], sd.seed[2]};
    j["modulus"] = sd.polynomial;  // constant term first; empty for primes
    json labels = json::object();
    for (int lab = 1; lab <= sd.t; ++lab)
      labels[std::to_string(lab)] = (lab == sd.t) ? 0 : lab;  // element index
    j["label_to_element"] = std::move(labels);
  }
  return j.dump(2);
}

}  // namespace xover

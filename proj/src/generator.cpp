#include "nsdp/generator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace nsdp {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
}

std::string strip(std::string s) {
  auto pos = s.find('#');
  if (pos != std::string::npos) s.erase(pos);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  if (sep == ' ') {
    while (in >> cur) out.push_back(cur);
  } else {
    while (std::getline(in, cur, sep)) out.push_back(strip(cur));
  }
  return out;
}

std::int64_t draw_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void validate_hypergraph(const Hypergraph& h) {
  if (h.n < 0) throw std::invalid_argument("negative vertex count");
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const Scope& e = h.edges[i];
    if (e.empty())
      throw std::invalid_argument("edge " + std::to_string(i) + " is empty");
    Scope sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("edge " + std::to_string(i) + " has a duplicate vertex");
    for (int v : e)
      if (v < 0 || v >= h.n)
        throw std::invalid_argument("edge " + std::to_string(i) + " references vertex " +
                                    std::to_string(v) + " outside [0, " + std::to_string(h.n) +
                                    ")");
  }
}

Hypergraph parse_hypergraph(std::istream& in) {
  Hypergraph h;
  std::unordered_map<std::string, int> ids;
  bool saw_header = false;
  bool saw_edge = false;
  int declared = -1;

  auto vertex_id = [&](const std::string& name, std::size_t line_no) {
    auto [it, fresh] = ids.try_emplace(name, static_cast<int>(ids.size()));
    if (fresh && declared >= 0 && static_cast<int>(ids.size()) > declared)
      fail(line_no, "vertex '" + name + "' exceeds the declared count of " +
                        std::to_string(declared));
    return it->second;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty()) continue;

    if (!saw_header && !saw_edge && line.rfind("verts", 0) == 0 &&
        (line.size() == 5 || std::isspace(static_cast<unsigned char>(line[5])))) {
      auto toks = split(line, ' ');
      if (toks.size() != 2) fail(line_no, "expected 'verts <count>'");
      try {
        declared = std::stoi(toks[1]);
      } catch (const std::exception&) {
        fail(line_no, "expected an integer vertex count, got '" + toks[1] + "'");
      }
      if (declared < 0) fail(line_no, "vertex count must be nonnegative");
      saw_header = true;
      continue;
    }

    std::vector<std::string> names;
    auto open = line.find('(');
    if (open != std::string::npos) {
      if (line.back() != ')') fail(line_no, "expected ')' at end of edge");
      std::string inner = line.substr(open + 1, line.size() - open - 2);
      names = split(inner, ',');
    } else {
      names = split(line, ' ');
    }

    Scope edge;
    for (const auto& name : names) {
      if (name.empty()) fail(line_no, "empty vertex name");
      edge.push_back(vertex_id(name, line_no));
    }
    if (edge.empty()) fail(line_no, "edge has no vertices");
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
      fail(line_no, "duplicate vertex in edge");
    h.edges.push_back(std::move(edge));
    saw_edge = true;
  }
  if (h.edges.empty()) throw std::runtime_error("hypergraph has no edges");
  h.n = declared >= 0 ? declared : static_cast<int>(ids.size());
  validate_hypergraph(h);
  return h;
}

Hypergraph parse_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return parse_hypergraph(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "verts " << h.n << "\n";
  for (const Scope& e : h.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << "\n";
  }
}

DopInstance generate_instance(const Hypergraph& h, const GeneratorConfig& cfg) {
  validate_hypergraph(h);
  if (cfg.coeff_lo < 1 || cfg.coeff_lo > cfg.coeff_hi)
    throw std::invalid_argument("coefficient range must satisfy 1 <= lo <= hi");

  std::mt19937_64 rng(cfg.seed);
  DopInstance inst;
  inst.n = h.n;
  inst.domains.assign(static_cast<std::size_t>(h.n), DopInstance::default_domain());

  for (int j = 0; j < h.n; ++j)
    inst.components.push_back(
        ObjectiveComponent::linear({j}, {draw_in(rng, cfg.coeff_lo, cfg.coeff_hi)}));

  for (const Scope& edge : h.edges) {
    LinearConstraint con;
    con.scope = edge;
    con.relation = cfg.relation;

    std::int64_t sum = 0;
    constexpr int kMaxCoeffRetries = 64;
    for (int attempt = 0;; ++attempt) {
      if (attempt == kMaxCoeffRetries)
        throw std::runtime_error(
            "cannot draw edge coefficients with sum >= 2 from range [" +
            std::to_string(cfg.coeff_lo) + ", " + std::to_string(cfg.coeff_hi) + "]");
      con.coeffs.clear();
      sum = 0;
      for (std::size_t i = 0; i < edge.size(); ++i) {
        std::int64_t a = draw_in(rng, cfg.coeff_lo, cfg.coeff_hi);
        con.coeffs.push_back(a);
        sum += a;
      }
      if (sum >= 2) break;
    }

    std::int64_t rhs = 0;
    do {
      rhs = static_cast<std::int64_t>(
          std::floor(draw_unit(rng) * static_cast<double>(sum)));
    } while (rhs < 1);
    con.rhs = std::min(rhs, sum - 1);
    inst.constraints.push_back(std::move(con));
  }
  return inst;
}

Hypergraph make_chain(int length, int width, int overlap) {
  if (width < 1) throw std::invalid_argument("chain width must be positive");
  if (overlap < 0 || overlap >= width)
    throw std::invalid_argument("chain overlap must lie in [0, width)");
  if (length < width)
    throw std::invalid_argument("chain length must be at least the window width");
  Hypergraph h;
  h.n = length;
  int step = width - overlap;
  for (int start = 0; start + width <= length; start += step) {
    Scope e(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) e[static_cast<std::size_t>(i)] = start + i;
    h.edges.push_back(std::move(e));
  }
  return h;
}

Hypergraph make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
  Hypergraph h;
  h.n = rows * cols;
  auto at = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) h.edges.push_back({at(r, c), at(r, c + 1)});
      if (r + 1 < rows) h.edges.push_back({at(r, c), at(r + 1, c)});
    }
  return h;
}

Hypergraph make_random_k_uniform(int n, int k, int m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  if (k < 1 || k > n) throw std::invalid_argument("edge size must lie in [1, n]");
  if (m < 1) throw std::invalid_argument("edge count must be positive");

  std::mt19937_64 rng(seed);
  Hypergraph h;
  h.n = n;
  std::set<Scope> seen;
  long long attempts = 0;
  const long long max_attempts = 1000LL * m + 1000;
  while (static_cast<int>(h.edges.size()) < m) {
    if (++attempts > max_attempts)
      throw std::runtime_error("cannot draw " + std::to_string(m) + " distinct " +
                               std::to_string(k) + "-subsets of " + std::to_string(n) +
                               " vertices");
    Scope e;
    while (static_cast<int>(e.size()) < k) {
      int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    if (seen.insert(e).second) h.edges.push_back(std::move(e));
  }
  return h;
}

}  // namespace nsdp

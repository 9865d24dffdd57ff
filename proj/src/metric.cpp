#include "spdiv/metric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "spdiv/error.hpp"

namespace spdiv {
namespace {

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Splits a line on any run of the given delimiters.
std::vector<std::string_view> split(std::string_view line, std::string_view delims) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(delims, pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = line.find_first_of(delims, pos);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// Calls fn(line_number, line) for each physical line, 1-based.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    if (!(end == text.size() && pos == end)) fn(line_no, text.substr(pos, end - pos));
    pos = end + 1;
  }
}

}  // namespace

FiniteMetric validate_metric(const Matrix& d, double tolerance) {
  if (!d.square()) {
    throw Error(ErrorKind::kNotSquare, "distance matrix is " + std::to_string(d.rows()) +
                                           "x" + std::to_string(d.cols()));
  }
  const std::size_t n = d.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!std::isfinite(d(i, j)))
        throw Error(ErrorKind::kNonFinite, "non-finite distance at " + pair_str(i, j), {i, j});

  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) != 0.0)
      throw Error(ErrorKind::kNonzeroDiagonal,
                  "NonzeroDiagonal(" + std::to_string(i) + "): d(i,i) must be 0", {i});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d(i, j) < 0.0)
        throw Error(ErrorKind::kNegativeDistance, "NegativeDistance" + pair_str(i, j), {i, j});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d(i, j) != d(j, i))
        throw Error(ErrorKind::kAsymmetricEntry, "AsymmetricEntry" + pair_str(i, j), {i, j});

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (d(i, j) > d(i, k) + d(k, j) + tolerance) {
          throw Error(ErrorKind::kTriangleViolation,
                      "TriangleViolation(" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + "): d(i,j) > d(i,k) + d(k,j)",
                      {i, j, k});
        }
      }
    }
  }
  return FiniteMetric(d);
}

FiniteMetric FiniteMetric::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorKind::kInvalidArgument, "scale factor must be positive and finite");
  }
  return FiniteMetric(factor * d_);
}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : n_(n), adjacency_(n * n, false) {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u >= n || v >= n) {
      throw Error(ErrorKind::kVertexOutOfRange,
                  "edge " + pair_str(u, v) + " has an endpoint outside [0," + std::to_string(n) +
                      ")",
                  {e});
    }
    if (u == v) throw Error(ErrorKind::kSelfLoop, "self-loop at vertex " + std::to_string(u), {e});
    if (u > v) std::swap(u, v);
    if (!adjacency_[u * n + v]) {
      adjacency_[u * n + v] = adjacency_[v * n + u] = true;
      edges_.emplace_back(u, v);
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return u < n_ && v < n_ && adjacency_[u * n_ + v];
}

bool Graph::is_independent(const std::vector<std::size_t>& vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || adjacent(vertices[i], vertices[j])) return false;
  return true;
}

Graph parse_graph(std::string_view text) {
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::size_t last_line = 0;
  std::vector<Graph::Edge> edges;

  for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    last_line = line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    const auto tokens = split(line, " \t\r");
    if (tokens.empty()) return;
    if (tokens.size() != 2) {
      throw Error(ErrorKind::kParseError,
                  "ParseError(" + std::to_string(line_no) + "): expected two integers",
                  {line_no});
    }
    std::size_t a = 0;
    std::size_t b = 0;
    if (!parse_number(tokens[0], a) || !parse_number(tokens[1], b)) {
      throw Error(ErrorKind::kParseError,
                  "ParseError(" + std::to_string(line_no) + "): expected two integers",
                  {line_no});
    }
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      return;
    }
    if (edges.size() == m) {
      throw Error(ErrorKind::kParseError,
                  "ParseError(" + std::to_string(line_no) + "): more than " +
                      std::to_string(m) + " edge lines",
                  {line_no});
    }
    if (a >= n || b >= n) {
      throw Error(ErrorKind::kVertexOutOfRange,
                  "VertexOutOfRange(" + std::to_string(line_no) + ")", {line_no});
    }
    if (a == b) {
      throw Error(ErrorKind::kSelfLoop, "SelfLoop(" + std::to_string(line_no) + ")", {line_no});
    }
    edges.emplace_back(a, b);
  });

  if (!have_header) {
    throw Error(ErrorKind::kParseError, "ParseError(" + std::to_string(last_line + 1) +
                                            "): missing \"n m\" header",
                {last_line + 1});
  }
  if (edges.size() != m) {
    throw Error(ErrorKind::kParseError,
                "ParseError(" + std::to_string(last_line + 1) + "): expected " +
                    std::to_string(m) + " edge lines, found " + std::to_string(edges.size()),
                {last_line + 1});
  }
  return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.size()) + " " + std::to_string(g.edges().size()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Matrix parse_metric_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    if (trim(raw).empty()) return;
    std::vector<double> row;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = raw.find(',', pos);
      const auto cell = trim(raw.substr(pos, comma == std::string_view::npos ? raw.npos
                                                                              : comma - pos));
      double value = 0.0;
      if (cell.empty() || !parse_number(cell, value)) {
        throw Error(ErrorKind::kParseError,
                    "ParseError(" + std::to_string(line_no) + "): bad number '" +
                        std::string(cell) + "'",
                    {line_no});
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorKind::kParseError,
                  "ParseError(" + std::to_string(line_no) + "): row has " +
                      std::to_string(row.size()) + " columns, expected " +
                      std::to_string(rows.front().size()),
                  {line_no});
    }
    rows.push_back(std::move(row));
  });
  return Matrix::from_rows(rows);
}

std::string serialize_metric_csv(const Matrix& d) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", d(i, j));
      if (j) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

long guarded_ceil(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= kLambdaIntegerGuard) return static_cast<long>(nearest);
  return static_cast<long>(std::ceil(x));
}

ReductionParameters reduction_parameters(std::size_t k, double theta0) {
  if (k == 0) throw Error(ErrorKind::kInvalidK, "InvalidK: k must be at least 1");
  if (!(theta0 > 0.0) || !std::isfinite(theta0)) {
    throw Error(ErrorKind::kInvalidTheta, "InvalidTheta: theta0 must be positive and finite");
  }
  ReductionParameters p;
  p.k = k;
  p.theta0 = theta0;
  p.lambda = guarded_ceil(std::log(4.0 * static_cast<double>(k)) / theta0);
  p.q = std::exp(-theta0 * static_cast<double>(p.lambda));
  p.r = p.q * p.q;
  p.threshold = static_cast<double>(k) / (1.0 + static_cast<double>(k - 1) * p.r);
  return p;
}

std::pair<FiniteMetric, ReductionInstance> encode_graph(const Graph& g, std::size_t k,
                                                       double theta0) {
  if (k == 0 || k > g.size()) {
    throw Error(ErrorKind::kInvalidK, "InvalidK: k=" + std::to_string(k) + " outside [1," +
                                          std::to_string(g.size()) + "]");
  }
  ReductionInstance instance{g, reduction_parameters(k, theta0)};
  const double lambda = static_cast<double>(instance.params.lambda);
  const std::size_t n = g.size();
  Matrix d(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) d(u, v) = g.adjacent(u, v) ? lambda : 2.0 * lambda;
  return {validate_metric(d, 0.0), std::move(instance)};
}

}  // namespace spdiv

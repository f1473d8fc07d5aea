#include "convextest/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace convextest {

namespace {

// Strips one trailing '\r' so CRLF inputs parse; the writer only ever emits
// LF.
void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == '#';
  }
  return true;
}

}  // namespace

PointSet read_point_set(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long d = -1, n = -1;

  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (is_comment_or_blank(line)) continue;
    std::istringstream header(line);
    if (!(header >> d >> n))
      throw ParseError(line_no, "expected header 'd n'");
    std::string rest;
    if (header >> rest) throw ParseError(line_no, "trailing token '" + rest + "'");
    break;
  }
  if (d < 0) throw ParseError(line_no, "missing header 'd n'");
  if (d < 1 || d > 64) throw ParseError(line_no, "dimension out of range");
  if (n < 1) throw ParseError(line_no, "point count must be positive");

  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  while (static_cast<long long>(pts.size()) < n) {
    if (!std::getline(in, line))
      throw ParseError(line_no, "expected " + std::to_string(n) + " points, got " +
                                    std::to_string(pts.size()));
    ++line_no;
    chomp(line);
    if (is_comment_or_blank(line)) continue;
    std::istringstream fields(line);
    Point p;
    std::string field;
    for (long long j = 0; j < d; ++j) {
      if (!(fields >> field))
        throw ParseError(line_no, "expected " + std::to_string(d) + " coordinates");
      try {
        p.x.push_back(parse_rational(field));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    }
    std::string rest;
    if (fields >> rest) throw ParseError(line_no, "trailing token '" + rest + "'");
    pts.push_back(std::move(p));
  }

  try {
    return PointSet(static_cast<int>(d), std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

PointSet read_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& ps,
                     const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << ps.dim() << " " << ps.size() << "\n";
  for (Index i = 0; i < ps.size(); ++i) {
    for (int j = 0; j < ps.dim(); ++j) {
      if (j) out << " ";
      out << rational_to_string(ps.coord(i, j));
    }
    out << "\n";
  }
}

void write_point_set_file(const std::string& path, const PointSet& ps,
                          const std::string& comment) {
  std::ofstream out(path, std::ios::binary);  // keep LF on every platform
  if (!out) throw ParseError(0, "cannot open '" + path + "' for writing");
  write_point_set(out, ps, comment);
}

std::string result_record_to_json(const ResultRecord& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["params"] = {{"n", r.n},
                 {"d", r.d},
                 {"epsilon", rational_to_string(r.epsilon)},
                 {"k", r.k},
                 {"ell", r.ell},
                 {"s", r.s},
                 {"repetitions", r.repetitions}};
  if (r.command == "test-close")
    j["params"]["delta"] = rational_to_string(r.delta);
  j["seed"] = r.seed;
  j["decision"] = r.verdict.accept ? "accept" : "reject";

  if (r.verdict.witness) {
    const NegativeWitness& w = *r.verdict.witness;
    nlohmann::json cert;
    cert["type"] = "negative";
    cert["ids"] = w.ids;
    cert["interior_id"] = w.interior_id;
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [id, coeff] : w.coefficients)
      coeffs[std::to_string(id)] = rational_to_string(coeff);
    cert["coefficients"] = coeffs;
    j["certificate"] = cert;
  } else if (r.verdict.accept && !r.verdict.positive_certificate.empty()) {
    j["certificate"] = {{"type", "positive"},
                        {"ids", r.verdict.positive_certificate}};
  } else {
    j["certificate"] = nullptr;
  }

  nlohmann::json trials = nlohmann::json::array();
  for (const TrialRecord& t : r.verdict.trials)
    trials.push_back({{"index", t.index},
                      {"seed", t.seed.value},
                      {"sample_convex", t.sample_convex}});
  j["trials"] = trials;
  j["wall_ms"] = r.wall_ms;
  return j.dump();
}

}  // namespace convextest

#include "hesscurve/fixtures.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <json.hpp>
#include <sstream>

#include "hesscurve/error.hpp"
#include "hesscurve/parse.hpp"

#ifndef HESSCURVE_DATA_DIR
#define HESSCURVE_DATA_DIR "data"
#endif

namespace hesscurve {

namespace {

const char* const kExampleIds[] = {"thm1_quartic",  "fig2a_quartic", "fig2b_quartic",
                                   "fig3a_quintic", "fig3b_quintic", "fig4_quintic",
                                   "fig5_sextic_11", "fig6a_sextic", "fig6b_sextic"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

int to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size() || v < 0) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::FixtureCorrupt, "bad value for " + key + ": '" + value + "'");
  }
}

Line parse_line(const std::string& text) {
  if (text == "infinity") return Line::at_infinity();
  std::vector<Rational> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_rational(trim(item)));
  if (parts.size() != 3) throw Error(Errc::FixtureCorrupt, "bad line '" + text + "'");
  return Line::affine(parts[0], parts[1], parts[2]);
}

}  // namespace

int PaperExample::oval_threshold() const {
  switch (degree()) {
    case 4: return 4;
    case 5: return 8;
    case 6: return 11;
    default: throw Error(Errc::InvalidArgument, "no threshold for degree " + std::to_string(degree()));
  }
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("HESSCURVE_DATA"); env != nullptr && *env != '\0') return env;
  return HESSCURVE_DATA_DIR;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string polynomial_digest(const BivarPoly& f) { return fnv1a_hex(to_string(f)); }

PaperExample parse_example(std::istream& in) {
  std::map<std::string, std::string> fields;
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(Errc::FixtureCorrupt, "expected key=value: '" + line + "'");
    fields[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  for (const char* key : {"id", "stated_ovals", "compact", "digest", "poly"}) {
    if (!fields.count(key)) throw Error(Errc::FixtureCorrupt, std::string("missing field ") + key);
  }
  PaperExample ex;
  ex.id = fields["id"];
  try {
    ex.f = parse_poly(fields["poly"]);
  } catch (const Error& e) {
    throw Error(Errc::FixtureCorrupt, ex.id + ": " + e.what());
  }
  if (polynomial_digest(ex.f) != fields["digest"]) {
    throw Error(Errc::FixtureCorrupt, ex.id + ": digest mismatch, stored " + fields["digest"] + ", computed " +
                                          polynomial_digest(ex.f));
  }
  ex.stated_ovals = to_int("stated_ovals", fields["stated_ovals"]);
  if (fields.count("stated_unbounded")) ex.stated_unbounded = to_int("stated_unbounded", fields["stated_unbounded"]);
  if (fields.count("stated_rp2_ovals")) ex.stated_rp2_ovals = to_int("stated_rp2_ovals", fields["stated_rp2_ovals"]);
  if (fields["compact"] != "true" && fields["compact"] != "false") {
    throw Error(Errc::FixtureCorrupt, ex.id + ": compact must be true or false");
  }
  ex.compact = fields["compact"] == "true";
  return ex;
}

std::vector<PaperExample> load_examples(const std::filesystem::path& data_dir) {
  std::vector<PaperExample> out;
  for (const char* id : kExampleIds) {
    const auto path = data_dir / "examples" / (std::string(id) + ".poly");
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoError, "cannot open fixture " + path.string());
    out.push_back(parse_example(in));
    if (out.back().id != id) throw Error(Errc::FixtureCorrupt, path.string() + ": id is " + out.back().id);
  }
  return out;
}

PaperExample find_example(const std::vector<PaperExample>& examples, const std::string& id) {
  for (const auto& ex : examples) {
    if (ex.id == id) return ex;
  }
  throw Error(Errc::InvalidArgument, "unknown example '" + id + "'");
}

PaperTables load_tables(const std::filesystem::path& data_dir) {
  const auto path = data_dir / "tables.json";
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  PaperTables t;
  try {
    const auto j = nlohmann::json::parse(in);
    t.hessian_degree = j.at("table1").at("hessian_degree").get<std::vector<int>>();
    t.compact_bound = j.at("table1").at("harnack_bound").get<std::vector<int>>();
    t.noncompact_degree = j.at("table2").at("hessian_degree").get<std::vector<int>>();
    for (const auto& pair : j.at("table2").at("harnack_pair")) t.noncompact.emplace_back(pair.at(0), pair.at(1));
    const auto& t3 = j.at("table3");
    t.thm1_hessian = parse_poly(t3.at("hessian").get<std::string>());
    for (const auto& row : t3.at("rows")) {
      Table3Row r{row.at("name").get<std::string>(), parse_line(row.at("line").get<std::string>()), {}, {}, {}, {}};
      for (const auto& c : row.at("quartic")) r.quartic.emplace_back(c.get<long>());
      r.delta = parse_rational(row.at("delta").get<std::string>());
      r.L = parse_rational(row.at("L").get<std::string>());
      r.a = parse_rational(row.at("a").get<std::string>());
      t.table3.push_back(std::move(r));
    }
    const auto& w = j.at("figure1").at("window");
    t.fig1_x_lo = parse_rational(w.at(0).get<std::string>());
    t.fig1_x_hi = parse_rational(w.at(1).get<std::string>());
    t.fig1_y_lo = parse_rational(w.at(2).get<std::string>());
    t.fig1_y_hi = parse_rational(w.at(3).get<std::string>());
    t.fig1_components = j.at("figure1").at("components").get<int>();
    const auto& sv = j.at("sample_values");
    for (const auto& p : sv.at("points")) {
      t.sample_points.emplace_back(parse_rational(p.at(0).get<std::string>()), parse_rational(p.at(1).get<std::string>()));
    }
    for (const auto& v : sv.at("printed")) t.sample_printed.push_back(parse_rational(v.get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::FixtureCorrupt, path.string() + ": " + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::FixtureCorrupt) throw;
    throw Error(Errc::FixtureCorrupt, path.string() + ": " + e.what());
  }
  return t;
}

Certificate load_thm1_certificate(const std::filesystem::path& data_dir) {
  return load_certificate(data_dir / "thm1.cert");
}

}  // namespace hesscurve

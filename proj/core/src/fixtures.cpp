#include "stolarsky/fixtures.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace stolarsky {

namespace {

Monomial to_monomial(const std::map<std::string, int>& exps, const VarSetPtr& vars) {
  std::vector<std::uint32_t> e(vars->size(), 0);
  for (const auto& [name, k] : exps) {
    auto idx = vars->index_of(name);
    if (!idx) throw error("prefactor monomial uses unknown variable '" + name + "'");
    e[*idx] = static_cast<std::uint32_t>(k);
  }
  return Monomial(std::move(e));
}

}  // namespace

bool ScaledPoly::equivalent(const ScaledPoly& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (!same_vars(core.vars(), o.core.vars())) return false;
  // scale_a * x^mono_a * core_a == scale_b * x^mono_b * core_b, rearranged so
  // both sides carry only nonnegative exponents
  std::map<std::string, int> diff = mono;
  for (const auto& [name, e] : o.mono) diff[name] -= e;
  std::map<std::string, int> here, there;
  for (const auto& [name, e] : diff) {
    if (e > 0)
      here[name] = e;
    else if (e < 0)
      there[name] = -e;
  }
  return core.mul_monomial(to_monomial(here, core.vars()), scale) ==
         o.core.mul_monomial(to_monomial(there, core.vars()), o.scale);
}

std::string ScaledPoly::prefactor_string() const {
  std::ostringstream os;
  os << scale.to_string();
  for (const auto& [name, e] : mono) {
    if (e == 0) continue;
    os << "*" << name;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string ScaledPoly::to_string() const {
  return prefactor_string() + " * (" + core.to_string() + ")";
}

FixtureMatch match_scaled(const ScaledPoly& derived, const ScaledPoly& fixture) {
  FixtureMatch m;
  m.value_equal = derived.equivalent(fixture);
  if (m.value_equal) {
    m.same_orientation = true;
    return m;
  }
  ScaledPoly flipped{-derived.scale, derived.mono, -derived.core};
  if (flipped.equivalent(fixture)) {
    // same value; the two only chose opposite (scale, core) sign conventions
    m.value_equal = true;
    m.same_orientation = false;
  }
  return m;
}

const std::string& Fixture::field(const std::string& key) const {
  auto it = fields.find(key);
  if (it == fields.end()) throw error("fixture '" + stage + "': missing field '" + key + "'");
  return it->second;
}

std::optional<std::string> Fixture::maybe_field(const std::string& key) const {
  auto it = fields.find(key);
  if (it == fields.end()) return std::nullopt;
  return it->second;
}

VarSetPtr Fixture::vars() const {
  std::istringstream is(field("vars"));
  std::vector<std::string> names;
  std::string n;
  while (is >> n) names.push_back(n);
  return VarSet::make(std::move(names));
}

MultiPoly Fixture::poly(const std::string& key) const {
  return MultiPoly::parse(vars(), field(key));
}

ScaledPoly Fixture::scaled_poly() const {
  ScaledPoly sp;
  sp.scale = Rational(field("prefactor"));
  if (auto m = maybe_field("prefactor_monomial")) sp.mono = parse_signed_monomial(*m);
  sp.core = poly();
  return sp;
}

BigInt Fixture::bigint(const std::string& key) const { return BigInt(field(key)); }

int Fixture::integer(const std::string& key) const { return std::stoi(field(key)); }

FixtureSet FixtureSet::load_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  FixtureSet out;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw error("fixture directory '" + dir + "' not found");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".txt") files.push_back(entry.path());
  if (files.empty()) throw error("fixture directory '" + dir + "' contains no .txt files");
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw error("cannot read fixture '" + path.string() + "'");
    Fixture fx;
    std::string line;
    std::string last_key;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (std::isspace(static_cast<unsigned char>(line[0])) && !last_key.empty()) {
        // continuation line
        std::string cont = line;
        std::size_t start = cont.find_first_not_of(" \t");
        if (last_key == "flag")
          fx.flags.back() += " " + cont.substr(start);
        else
          fx.fields[last_key] += " " + cont.substr(start);
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string::npos)
        throw error("fixture '" + path.string() + "': bad line '" + line + "'");
      std::string key = line.substr(0, colon);
      std::string value = line.substr(colon + 1);
      std::size_t start = value.find_first_not_of(" \t");
      value = start == std::string::npos ? "" : value.substr(start);
      if (key == "flag") {
        fx.flags.push_back(value);
      } else {
        fx.fields[key] = value;
      }
      last_key = key;
    }
    fx.stage = fx.field("stage");
    out.by_stage_.emplace(fx.stage, std::move(fx));
  }
  return out;
}

const Fixture& FixtureSet::get(const std::string& stage) const {
  auto it = by_stage_.find(stage);
  if (it == by_stage_.end()) throw error("missing fixture for stage '" + stage + "'");
  return it->second;
}

std::map<std::string, int> parse_signed_monomial(std::string_view text) {
  std::map<std::string, int> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) throw parse_error("bad monomial '" + std::string(text) + "'");
    std::string name(text.substr(start, pos - start));
    int e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      bool negative = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
      }
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) throw parse_error("bad exponent in '" + std::string(text) + "'");
      e = std::stoi(std::string(text.substr(dstart, pos - dstart)));
      if (negative) e = -e;
    }
    out[name] += e;
    skip_ws();
    if (pos < text.size()) {
      if (text[pos] != '*') throw parse_error("expected '*' in '" + std::string(text) + "'");
      ++pos;
      skip_ws();
    }
  }
  return out;
}

}  // namespace stolarsky

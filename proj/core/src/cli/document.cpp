#include "cutpoint/cli/document.hpp"

#include <cctype>
#include <json.hpp>

#include "cutpoint/exactmath/errors.hpp"

namespace cutpoint {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object()) fail("expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(std::string("missing field '") + name + "'");
  return *it;
}

const json* optional_field(const json& j, const char* name) {
  auto it = j.find(name);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

Rational exact_entry(const json& j) {
  if (j.is_string()) return parse_exact_number(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  fail("expected an exact number (\"p/q\" string or integer), got " + j.dump());
}

double float_entry(const json& j) {
  if (j.is_number()) return j.get<double>();
  fail("expected a number, got " + j.dump());
}

template <class T>
T parse_entry(const json& j);

template <>
Rational parse_entry<Rational>(const json& j) {
  return exact_entry(j);
}
template <>
double parse_entry<double>(const json& j) {
  return float_entry(j);
}
template <>
GaussianRational parse_entry<GaussianRational>(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) fail("complex entry needs [re, im], got " + j.dump());
    return GaussianRational{exact_entry(j[0]), exact_entry(j[1])};
  }
  return GaussianRational(exact_entry(j));
}
template <>
Complex parse_entry<Complex>(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) fail("complex entry needs [re, im], got " + j.dump());
    return Complex(float_entry(j[0]), float_entry(j[1]));
  }
  return Complex(float_entry(j));
}

json entry_json(const Rational& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
  return to_string(v);
}
json entry_json(double v) { return v; }
json entry_json(const GaussianRational& v) {
  if (v.im == 0) return entry_json(v.re);
  return json::array({entry_json(v.re), entry_json(v.im)});
}
json entry_json(const Complex& v) {
  if (v.imag() == 0.0) return v.real();
  return json::array({v.real(), v.imag()});
}

template <class T>
Matrix<T> parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) fail("expected a non-empty matrix (list of rows)");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) fail("expected a matrix (list of rows), got " + j.dump());
  const std::size_t cols = j[0].size();
  std::vector<T> data;
  data.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) fail("matrix rows must be lists of equal length");
    for (const auto& v : row) data.push_back(parse_entry<T>(v));
  }
  return Matrix<T>(rows, cols, std::move(data));
}

template <class T>
std::vector<T> parse_vector(const json& j) {
  if (!j.is_array()) fail("expected a vector, got " + j.dump());
  std::vector<T> out;
  for (const auto& v : j) out.push_back(parse_entry<T>(v));
  return out;
}

template <class T>
json matrix_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(entry_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
json column_json(const Matrix<T>& m) {
  json out = json::array();
  for (const auto& v : m.entries()) out.push_back(entry_json(v));
  return out;
}

template <class T>
std::vector<Matrix<T>> parse_kraus(const json& j) {
  if (!j.is_array() || j.empty()) fail("expected a non-empty list of Kraus matrices");
  std::vector<Matrix<T>> out;
  for (const auto& m : j) out.push_back(parse_matrix<T>(m));
  return out;
}

template <class T>
json kraus_json(const std::vector<Matrix<T>>& list) {
  json out = json::array();
  for (const auto& m : list) out.push_back(matrix_json(m));
  return out;
}

Alphabet parse_alphabet(const json& j) {
  if (j.is_string()) return Alphabet(j.get<std::string>());
  if (j.is_array()) {
    std::string symbols;
    for (const auto& s : j) {
      if (!s.is_string() || s.get<std::string>().size() != 1) fail("alphabet symbols must be single characters");
      symbols += s.get<std::string>();
    }
    return Alphabet(symbols);
  }
  fail("alphabet must be a string of symbols");
}

Symbol parse_symbol(const std::string& key) {
  if (key.size() != 1) fail("symbol keys must be single characters, got '" + key + "'");
  return key[0];
}

std::size_t parse_index(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail("expected a nonnegative integer, got " + j.dump());
  return j.get<std::size_t>();
}

template <class T>
Matrix<T> parse_initial_vector(const json& j, std::size_t states) {
  if (j.is_object()) return Matrix<T>::basis(states, parse_index(field(j, "basis")));
  return Matrix<T>::column(parse_vector<T>(j));
}

template <class T>
Gfa<T> parse_gfa(const json& j, const Alphabet& alphabet, std::size_t states) {
  Gfa<T> g;
  g.alphabet = alphabet;
  for (const auto& [key, m] : field(j, "transitions").items()) g.transitions.emplace(parse_symbol(key), parse_matrix<T>(m));
  if (const auto* m = optional_field(j, "left_marker")) g.left_marker = parse_matrix<T>(*m);
  if (const auto* m = optional_field(j, "right_marker")) g.right_marker = parse_matrix<T>(*m);
  g.initial = parse_initial_vector<T>(field(j, "initial"), states);
  g.final_row = Matrix<T>::row(parse_vector<T>(field(j, "final")));
  return g;
}

std::vector<std::size_t> parse_accept(const json& j) {
  if (!j.is_array()) fail("final must list accepting states");
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(parse_index(v));
  return out;
}

template <class T>
Mcqfa<T> parse_mcqfa(const json& j, const Alphabet& alphabet, std::size_t states) {
  Mcqfa<T> m;
  m.alphabet = alphabet;
  for (const auto& [key, u] : field(j, "transitions").items()) m.transitions.emplace(parse_symbol(key), parse_matrix<T>(u));
  if (const auto* u = optional_field(j, "left_marker")) m.left_marker = parse_matrix<T>(*u);
  if (const auto* u = optional_field(j, "right_marker")) m.right_marker = parse_matrix<T>(*u);
  m.initial = parse_initial_vector<T>(field(j, "initial"), states);
  m.accept = parse_accept(field(j, "final"));
  return m;
}

template <class T>
Qfa<T> parse_qfa(const json& j, const Alphabet& alphabet, std::size_t states) {
  Qfa<T> q;
  q.alphabet = alphabet;
  for (const auto& [key, list] : field(j, "transitions").items()) q.transitions.emplace(parse_symbol(key), parse_kraus<T>(list));
  if (const auto* list = optional_field(j, "left_marker")) q.left_marker = parse_kraus<T>(*list);
  if (const auto* list = optional_field(j, "right_marker")) q.right_marker = parse_kraus<T>(*list);
  const json& init = field(j, "initial");
  if (const auto* basis = init.is_object() ? optional_field(init, "basis") : nullptr) {
    q.initial = basis_density<T>(states, parse_index(*basis));
  } else if (init.is_object()) {
    const Matrix<T> v = Matrix<T>::column(parse_vector<T>(field(init, "vector")));
    q.initial = v * adjoint(v);
  } else {
    q.initial = parse_matrix<T>(init);
  }
  q.accept = parse_accept(field(j, "final"));
  return q;
}

json header(const char* model, const char* scalar, const Alphabet& alphabet, std::size_t states) {
  json j;
  j["model"] = model;
  j["states"] = states;
  j["alphabet"] = alphabet.symbols();
  j["scalar"] = scalar;
  return j;
}

template <class T>
const char* scalar_name() {
  if constexpr (std::is_same_v<T, Rational>) return "rational";
  if constexpr (std::is_same_v<T, double>) return "float";
  if constexpr (std::is_same_v<T, GaussianRational>) return "complex-rational";
  if constexpr (std::is_same_v<T, Complex>) return "complex-float";
}

template <class T>
json to_json(const Gfa<T>& g, const char* model) {
  json j = header(model, scalar_name<T>(), g.alphabet, g.states());
  json t = json::object();
  for (const auto& [s, m] : g.transitions) t[std::string(1, s)] = matrix_json(m);
  j["transitions"] = std::move(t);
  if (g.left_marker) j["left_marker"] = matrix_json(*g.left_marker);
  if (g.right_marker) j["right_marker"] = matrix_json(*g.right_marker);
  j["initial"] = column_json(g.initial);
  j["final"] = column_json(g.final_row);
  return j;
}

template <class T>
json to_json(const Mcqfa<T>& m) {
  json j = header("mcqfa", scalar_name<T>(), m.alphabet, m.states());
  json t = json::object();
  for (const auto& [s, u] : m.transitions) t[std::string(1, s)] = matrix_json(u);
  j["transitions"] = std::move(t);
  if (m.left_marker) j["left_marker"] = matrix_json(*m.left_marker);
  if (m.right_marker) j["right_marker"] = matrix_json(*m.right_marker);
  j["initial"] = column_json(m.initial);
  j["final"] = m.accept;
  return j;
}

template <class T>
json to_json(const Qfa<T>& q) {
  json j = header("qfa", scalar_name<T>(), q.alphabet, q.states());
  json t = json::object();
  for (const auto& [s, list] : q.transitions) t[std::string(1, s)] = kraus_json(list);
  j["transitions"] = std::move(t);
  if (q.left_marker) j["left_marker"] = kraus_json(*q.left_marker);
  if (q.right_marker) j["right_marker"] = kraus_json(*q.right_marker);
  j["initial"] = matrix_json(q.initial);
  j["final"] = q.accept;
  return j;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

// Converts library exceptions raised while assembling objects from a
// document (bad symbols, dimension mismatches) into parse errors.
template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const ValidationError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    fail(std::string("malformed document: ") + e.what());
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

std::string letters_of(const json& j) {
  if (!j.is_string()) fail("expected a string of letters, got " + j.dump());
  return j.get<std::string>();
}

SolutionDescriptor solution_from_json(const json& j) {
  SolutionDescriptor s;
  s.letters = Alphabet(letters_of(field(j, "letters")));
  const json& coeffs = field(j, "coefficients");
  if (!coeffs.is_object()) fail("coefficients must map letters to numbers");
  const bool approximate = optional_field(j, "approximate") && field(j, "approximate").get<bool>();
  std::vector<Rational> bases;
  std::vector<double> raw;
  for (Symbol letter : s.letters) {
    const json& c = field(coeffs, std::string(1, letter).c_str());
    if (approximate) {
      raw.push_back(float_entry(c));
    } else {
      bases.push_back(exact_entry(c));
    }
  }
  if (coeffs.size() != s.letters.size()) fail("coefficients must be given for exactly the solution letters");
  if (approximate) {
    s.coefficients = std::move(raw);
  } else {
    s.coefficients = std::move(bases);
  }
  const json& th = field(j, "threshold");
  if (th.is_string() && th.get<std::string>() == "inf") {
    s.threshold = PositiveInfinity{};
  } else if (approximate) {
    s.threshold = float_entry(th);
  } else {
    s.threshold = exact_entry(th);
  }
  s.relation = Relation::Less;
  if (const auto* rel = optional_field(j, "relation")) {
    const std::string r = rel->get<std::string>();
    if (r == "=") {
      s.relation = Relation::Equals;
    } else if (r != "<") {
      fail("relation must be '<' or '=', got '" + r + "'");
    }
  }
  return s;
}

json solution_json(const SolutionDescriptor& s) {
  json j;
  j["letters"] = s.letters.symbols();
  json coeffs = json::object();
  for (std::size_t i = 0; i < s.letters.size(); ++i) {
    const std::string key(1, s.letters[i]);
    if (s.is_exact()) {
      coeffs[key] = to_string(s.bases()[i]);
    } else {
      coeffs[key] = std::get<std::vector<double>>(s.coefficients)[i];
    }
  }
  j["coefficients"] = std::move(coeffs);
  if (s.threshold_is_infinite()) {
    j["threshold"] = "inf";
  } else if (const auto* tau = std::get_if<Rational>(&s.threshold)) {
    j["threshold"] = to_string(*tau);
  } else {
    j["threshold"] = std::get<double>(s.threshold);
  }
  j["relation"] = s.relation == Relation::Less ? "<" : "=";
  if (!s.is_exact()) j["approximate"] = true;
  return j;
}

ParityDescriptor parity_from_json(const json& j) {
  ParityDescriptor p;
  p.letters = Alphabet(letters_of(field(j, "X")));
  p.counted = Alphabet(letters_of(field(j, "Y")));
  const json& i = field(j, "i");
  if (!i.is_number_integer()) fail("parity bit must be 0 or 1");
  p.parity = i.get<int>();
  return p;
}

json parity_json(const ParityDescriptor& p) {
  json j;
  j["X"] = p.letters.symbols();
  j["Y"] = p.counted.symbols();
  j["i"] = p.parity;
  return j;
}

}  // namespace

Rational parse_exact_number(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return parse_rational(text);
  std::string digits(text.substr(0, dot));
  std::string frac(text.substr(dot + 1));
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("not a decimal literal: '" + std::string(text) + "'");
  }
  if (digits.empty() || digits == "-" || digits == "+") digits += "0";
  const Rational whole = parse_rational(digits);
  Integer den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  Rational part = make_rational(Integer(frac, 10), den);
  return digits[0] == '-' ? Rational(whole - part) : Rational(whole + part);
}

Automaton parse_automaton(std::string_view text) {
  const json j = parse_json(text);
  Automaton aut = guarded([&]() -> Automaton {
    const std::string model = field(j, "model").get<std::string>();
    std::string scalar = "rational";
    if (const auto* s = optional_field(j, "scalar")) scalar = s->get<std::string>();
    const Alphabet alphabet = parse_alphabet(field(j, "alphabet"));
    const std::size_t states = parse_index(field(j, "states"));
    const bool exact = scalar == "rational" || scalar == "complex-rational";
    if (!exact && scalar != "float" && scalar != "complex-float") fail("unknown scalar kind '" + scalar + "'");
    if (model == "gfa" || model == "pfa") {
      if (scalar.starts_with("complex")) fail(model + " documents need a real scalar kind");
      if (model == "gfa") {
        if (exact) return parse_gfa<Rational>(j, alphabet, states);
        return parse_gfa<double>(j, alphabet, states);
      }
      if (exact) return Pfa<Rational>(parse_gfa<Rational>(j, alphabet, states));
      return Pfa<double>(parse_gfa<double>(j, alphabet, states));
    }
    if (model == "mcqfa") {
      if (exact) return parse_mcqfa<GaussianRational>(j, alphabet, states);
      return parse_mcqfa<Complex>(j, alphabet, states);
    }
    if (model == "qfa") {
      if (exact) return parse_qfa<GaussianRational>(j, alphabet, states);
      return parse_qfa<Complex>(j, alphabet, states);
    }
    fail("unknown model '" + model + "'");
  });
  if (aut.states() != parse_index(j["states"])) {
    throw ValidationError({"document declares " + j["states"].dump() + " states, initial state has " +
                           std::to_string(aut.states())});
  }
  if (auto problems = validate(aut); !problems.empty()) throw ValidationError(std::move(problems));
  return aut;
}

std::string serialize_automaton(const Automaton& aut) {
  const json j = std::visit(
      [](const auto& m) -> json {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Gfa<Rational>> || std::is_same_v<M, Gfa<double>>) {
          return to_json(m, "gfa");
        } else if constexpr (std::is_same_v<M, Pfa<Rational>> || std::is_same_v<M, Pfa<double>>) {
          return to_json(m.as_gfa(), "pfa");
        } else {
          return to_json(m);
        }
      },
      aut.variant());
  return j.dump(2);
}

SolutionDescriptor parse_solution(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    SolutionDescriptor s = solution_from_json(j.contains("solution") ? j["solution"] : j);
    check_descriptor(s);
    return s;
  });
}

LanguageDescriptor parse_descriptor(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    LanguageDescriptor d;
    d.alphabet = Alphabet(letters_of(field(j, "alphabet")));
    const std::string form = field(j, "form").get<std::string>();
    auto indicator = [&] {
      return IndicatorDescriptor{d.alphabet, Alphabet(letters_of(field(j, "indicator")))};
    };
    if (form == "lambda") {
      d.form = LambdaForm{solution_from_json(field(j, "solution")), parity_from_json(field(j, "parity"))};
    } else if (form == "v") {
      d.form = VForm{solution_from_json(field(j, "solution")), parity_from_json(field(j, "parity")), indicator()};
    } else if (form == "inclusive") {
      d.form = InclusiveForm{solution_from_json(field(j, "solution")), parity_from_json(field(j, "parity"))};
    } else if (form == "indicator") {
      d.form = IndicatorOnly{indicator()};
    } else {
      fail("unknown descriptor form '" + form + "'");
    }
    check_descriptor(d);
    return d;
  });
}

std::string serialize_descriptor(const LanguageDescriptor& d) {
  json j;
  j["alphabet"] = d.alphabet.symbols();
  j["form"] = form_name(d);
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (!std::is_same_v<F, IndicatorOnly>) {
          j["solution"] = solution_json(f.solution);
          j["parity"] = parity_json(f.parity);
        }
        if constexpr (std::is_same_v<F, VForm> || std::is_same_v<F, IndicatorOnly>) {
          j["indicator"] = f.indicator.letters.symbols();
        }
      },
      d.form);
  return j.dump(2);
}

}  // namespace cutpoint

#include "qtwist/json_io.hpp"

#include <sstream>

namespace qtwist {

std::string monomial_to_string(const Monomial& m, const VarTable& vars) {
  std::ostringstream out;
  BigRat c = m.coeff;
  if (c < 0) {
    out << "-";
    c = -c;
  }
  if (m.vars.empty()) {
    out << rat_to_string(c);
    return out.str();
  }
  bool lead = true;
  if (c != 1) {
    out << rat_to_string(c);
    lead = false;
  }
  for (auto& [v, e] : m.vars) {
    if (!lead) out << "*";
    out << vars.name(v);
    if (e != 1) out << "^" << e;
    lead = false;
  }
  return out.str();
}

Monomial monomial_from_string(const std::string& text, const VarTable& vars) {
  Monomial m;
  std::string body = text;
  if (!body.empty() && body[0] == '-') {
    m.coeff = -m.coeff;
    body = body.substr(1);
  }
  if (body.empty()) throw Error("empty monomial literal");
  std::vector<std::string> factors;
  size_t pos = 0;
  while (pos != std::string::npos) {
    size_t star = body.find('*', pos);
    factors.push_back(body.substr(pos, star == std::string::npos
                                           ? std::string::npos
                                           : star - pos));
    pos = star == std::string::npos ? star : star + 1;
  }
  for (const std::string& f : factors) {
    if (f.empty()) throw Error("malformed monomial: " + text);
    if (std::isdigit(static_cast<unsigned char>(f[0]))) {
      m.coeff *= rat_from_string(f);
      continue;
    }
    size_t caret = f.find('^');
    std::string name = caret == std::string::npos ? f : f.substr(0, caret);
    long exp = 1;
    if (caret != std::string::npos) exp = std::stol(f.substr(caret + 1));
    m.vars.push_back({vars.index_of(name), exp});
  }
  return m;
}

json word_to_json(const Word& w) {
  json atoms = json::array();
  for (const Atom& a : w.atoms) {
    switch (a.kind) {
      case Atom::Kind::GenE:
        atoms.push_back(json{{"t", "e"}, {"i", a.index}});
        break;
      case Atom::Kind::GenF:
        atoms.push_back(json{{"t", "f"}, {"i", a.index}});
        break;
      case Atom::Kind::DiagQ: {
        json c = json::array();
        for (const BigRat& r : a.qdiag) c.push_back(rat_to_string(r));
        atoms.push_back(json{{"t", "qd"}, {"c", c}});
        break;
      }
      case Atom::Kind::QComm:
        atoms.push_back(json{{"t", "qc"},
                             {"q", a.qpow},
                             {"l", word_to_json(*a.left)},
                             {"r", word_to_json(*a.right)}});
        break;
    }
  }
  return atoms;
}

Word word_from_json(const json& j) {
  Word w;
  for (const json& a : j) {
    std::string t = a.at("t").get<std::string>();
    if (t == "e") {
      w.atoms.push_back(Atom::e(a.at("i").get<int>()));
    } else if (t == "f") {
      w.atoms.push_back(Atom::f(a.at("i").get<int>()));
    } else if (t == "qd") {
      std::vector<BigRat> c;
      for (const json& r : a.at("c"))
        c.push_back(rat_from_string(r.get<std::string>()));
      w.atoms.push_back(Atom::diag_q(std::move(c)));
    } else if (t == "qc") {
      w.atoms.push_back(Atom::qcomm(word_from_json(a.at("l")),
                                    word_from_json(a.at("r")),
                                    a.at("q").get<int>()));
    } else {
      throw Error("unknown word atom tag: " + t);
    }
  }
  return w;
}

json twist_to_json(const TwistElement& el, const VarTable& vars) {
  json factors = json::array();
  for (const TwistFactor& f : el.factors) {
    if (std::holds_alternative<CartanExp>(f)) {
      const CartanExp& ce = std::get<CartanExp>(f);
      json terms = json::array();
      for (const CartanTerm& t : ce.terms) {
        terms.push_back(json{{"param", vars.name(t.param)},
                             {"coeff", t.coeff},
                             {"diag1", t.diag1},
                             {"diag2", t.diag2}});
      }
      factors.push_back(json{{"kind", "cartan"}, {"terms", terms}});
    } else {
      const QExpFactor& qe = std::get<QExpFactor>(f);
      factors.push_back(
          json{{"kind", "qexp"},
               {"base", qe.base_qexp == 2 ? "q^2" : "q^-2"},
               {"coeff", monomial_to_string(qe.coeff, vars)},
               {"x", word_to_json(qe.x)},
               {"y", word_to_json(qe.y)}});
    }
  }
  return json{{"N", el.N}, {"factors", factors}};
}

TwistElement twist_from_json(const json& j, const VarTable& vars) {
  TwistElement el;
  el.N = j.at("N").get<int>();
  for (const json& f : j.at("factors")) {
    std::string kind = f.at("kind").get<std::string>();
    if (kind == "cartan") {
      CartanExp ce;
      for (const json& t : f.at("terms")) {
        CartanTerm term;
        term.param = vars.index_of(t.at("param").get<std::string>());
        term.coeff = t.at("coeff").get<long long>();
        term.diag1 = t.at("diag1").get<std::vector<long long>>();
        term.diag2 = t.at("diag2").get<std::vector<long long>>();
        ce.terms.push_back(std::move(term));
      }
      el.factors.push_back(std::move(ce));
    } else if (kind == "qexp") {
      QExpFactor qe;
      std::string base = f.at("base").get<std::string>();
      if (base == "q^2") {
        qe.base_qexp = 2;
      } else if (base == "q^-2") {
        qe.base_qexp = -2;
      } else {
        throw Error("unknown q-exponential base: " + base);
      }
      qe.coeff = monomial_from_string(f.at("coeff").get<std::string>(), vars);
      qe.x = word_from_json(f.at("x"));
      qe.y = word_from_json(f.at("y"));
      el.factors.push_back(std::move(qe));
    } else {
      throw Error("unknown twist factor kind: " + kind);
    }
  }
  return el;
}

}  // namespace qtwist

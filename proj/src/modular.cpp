#include "qtorder/modular.hpp"

#include <deque>

namespace qtorder {

namespace {

bool is_r(int s) { return s == 1 || s == 2; }

void push_syllable(std::vector<int>& st, int s) {
  if (s == 0) {
    if (!st.empty() && st.back() == 0) st.pop_back();
    else st.push_back(0);
    return;
  }
  s %= 3;
  if (s == 0) return;
  if (!st.empty() && is_r(st.back())) {
    int merged = (st.back() + s) % 3;
    st.pop_back();
    if (merged != 0) st.push_back(merged);
  } else {
    st.push_back(s);
  }
}

}  // namespace

bool ModularElement::operator<(const ModularElement& o) const {
  if (syllables.size() != o.syllables.size()) return syllables.size() < o.syllables.size();
  return syllables < o.syllables;
}

ModularElement modular_identity() { return {}; }
ModularElement modular_S() { return {{0}}; }
ModularElement modular_R() { return {{1}}; }
ModularElement modular_T1() { return {{0, 1}}; }
ModularElement modular_T2() { return {{0, 2}}; }

ModularElement multiply(const ModularElement& a, const ModularElement& b) {
  ModularElement out = a;
  for (int s : b.syllables) push_syllable(out.syllables, s);
  return out;
}

ModularElement inverse(const ModularElement& g) {
  ModularElement out;
  for (auto it = g.syllables.rbegin(); it != g.syllables.rend(); ++it)
    out.syllables.push_back(*it == 0 ? 0 : 3 - *it);
  return out;
}

ModularElement power(const ModularElement& g, long long n) { return qtorder::power(modular_ops(), g, n); }

ModularElement modular_reduce(const std::vector<int>& raw) {
  ModularElement out;
  for (int t : raw) {
    if (t == 0) push_syllable(out.syllables, 0);
    else if (t == 1) push_syllable(out.syllables, 1);
    else if (t == -1) push_syllable(out.syllables, 2);
    else throw Error(ErrorCode::BadGenerator, "modular token " + std::to_string(t));
  }
  return out;
}

ModularElement parse_modular(const std::string& text) {
  std::vector<int> raw;
  if (text == "e") return {};
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == 'S') raw.push_back(0);
    else if (c == 'R') raw.push_back(1);
    else if (c == 'r') raw.push_back(-1);
    else throw Error(ErrorCode::ParseError, "position " + std::to_string(i) + ": unexpected character '" + c + "'");
  }
  return modular_reduce(raw);
}

std::string format_modular(const ModularElement& g) {
  if (g.empty()) return "e";
  std::string s;
  for (int t : g.syllables) s += t == 0 ? "S" : (t == 1 ? "R" : "RR");
  return s;
}

SemigroupForm semigroup_form(const ModularElement& g) {
  SemigroupForm f;
  if (g.empty()) return f;
  if (g.syllables.size() == 1 && g.syllables[0] == 0) {
    f.left_s = true;
    return f;
  }
  std::vector<int> w = g.syllables;
  if (is_r(w.front())) {
    f.left_s = true;
    w.insert(w.begin(), 0);  // g = S (S g)
  }
  if (w.back() == 0) {
    f.right_s = true;
    w.pop_back();  // g = (g S) S
  }
  // w now reads S R^{a_1} S R^{a_2} ... S R^{a_k}
  for (std::size_t i = 1; i < w.size(); i += 2) f.t.push_back(w[i]);
  return f;
}

ModularElement compose(const SemigroupForm& form) {
  std::vector<int> raw;
  if (form.left_s) raw.push_back(0);
  for (int t : form.t) {
    raw.push_back(0);
    raw.push_back(t == 1 ? 1 : -1);
  }
  if (form.right_s) raw.push_back(0);
  return modular_reduce(raw);
}

Decomposition modular_decompose(const std::vector<int>& raw) {
  Decomposition d;
  d.normal = modular_reduce(raw);
  d.form = semigroup_form(d.normal);
  return d;
}

long long rademacher_raw(const ModularElement& g) {
  long long n = 0;
  for (int t : semigroup_form(g).t) n += t == 1 ? 1 : -1;
  return n;
}

long long rademacher(const ModularElement& g) {
  std::deque<int> w(g.syllables.begin(), g.syllables.end());
  while (w.size() >= 2) {
    if (w.front() == 0 && w.back() == 0) {
      w.pop_front();
      w.pop_back();
    } else if (is_r(w.front()) && is_r(w.back())) {
      int merged = (w.front() + w.back()) % 3;
      w.pop_front();
      w.pop_back();
      if (merged != 0) w.push_back(merged);
    } else {
      break;
    }
  }
  if (w.size() <= 1) return 0;
  if (w.front() != 0) {  // R ... S: rotate the trailing S to the front
    w.push_front(0);
    w.pop_back();
  }
  long long n = 0;
  for (std::size_t i = 1; i < w.size(); i += 2) n += w[i] == 1 ? 1 : -1;
  return n;
}

std::vector<ModularElement> modular_ball(int radius) {
  if (radius < 0 || radius > caps().modular_radius)
    throw Error(ErrorCode::CapExceeded, "modular ball radius " + std::to_string(radius) + " outside 0.." +
                                            std::to_string(caps().modular_radius));
  std::vector<ModularElement> out{ModularElement{}};
  std::size_t begin = 0;
  for (int k = 1; k <= radius; ++k) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int s : {0, 1, 2}) {
        const auto& w = out[i].syllables;
        if (!w.empty() && (w.back() == 0) == (s == 0)) continue;
        ModularElement next = out[i];
        next.syllables.push_back(s);
        out.push_back(std::move(next));
      }
    begin = end;
  }
  return out;
}

GroupOps<ModularElement> modular_ops() {
  GroupOps<ModularElement> ops;
  ops.multiply = [](const ModularElement& a, const ModularElement& b) { return multiply(a, b); };
  ops.inverse = [](const ModularElement& g) { return inverse(g); };
  ops.identity = ModularElement{};
  ops.equal = [](const ModularElement& a, const ModularElement& b) { return a == b; };
  ops.length = [](const ModularElement& g) { return static_cast<long long>(g.size()); };
  return ops;
}

}  // namespace qtorder

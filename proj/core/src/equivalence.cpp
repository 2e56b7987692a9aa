#include "trip/equivalence.hpp"

#include <algorithm>

namespace trip {

Word relabel_word(std::string_view w, const Perm3& p) {
  Word out;
  out.reserve(w.size());
  for (char c : w) {
    if (c < '1' || c > '3') throw DomainError("relabel_word: letter out of range");
    out += static_cast<char>('0' + p(c - '0'));
  }
  return out;
}

Word reverse_word(std::string_view w) { return Word(w.rbegin(), w.rend()); }

Substitution reverse_substitution(const Substitution& s) {
  Substitution out = s;
  for (auto& img : out.images) std::reverse(img.begin(), img.end());
  return out;
}

namespace {

template <typename F>
LanguageSample transform_language(const LanguageSample& L, const std::string& note, F&& f) {
  FactorSet out(L.factors().max_len());
  for (int len = 1; len <= L.factors().max_len(); ++len) {
    L.factors().for_each(len, [&](std::string_view w) { out.insert(f(w)); });
  }
  Provenance prov = L.provenance();
  prov.coding += note;
  return LanguageSample(std::move(out), L.reliable_window(), L.depth(), std::move(prov));
}

}  // namespace

LanguageSample relabel_language(const LanguageSample& L, const Perm3& p) {
  return transform_language(L, " | relabel " + p.name(),
                            [&p](std::string_view w) { return relabel_word(w, p); });
}

LanguageSample reverse_language(const LanguageSample& L) {
  return transform_language(L, " | reversed",
                            [](std::string_view w) { return reverse_word(w); });
}

TripTriple twin(const TripTriple& t) {
  static const Perm3 p12 = *Perm3::parse("12");
  static const Perm3 p13 = *Perm3::parse("13");
  return {compose(t.sigma, p13), compose(p12, t.tau1), compose(p12, t.tau0)};
}

TripTriple e_form(const TripTriple& t) {
  return {Perm3{}, compose(t.tau0, t.sigma), compose(t.tau1, t.sigma)};
}

std::vector<TripTriple> conjugacy_orbit(const TripTriple& t) {
  TripTriple ef = e_form(t);
  std::vector<TripTriple> orbit;
  orbit.reserve(6);
  for (const auto& rho : Perm3::all()) {
    Perm3 inv = rho.inverse();
    orbit.push_back({rho, compose(ef.tau0, inv), compose(ef.tau1, inv)});
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<TripTriple> equivalence_class(const TripTriple& t) {
  auto cls = conjugacy_orbit(t);
  auto tw = conjugacy_orbit(twin(t));
  cls.insert(cls.end(), tw.begin(), tw.end());
  std::sort(cls.begin(), cls.end());
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  return cls;
}

std::string verdict_name(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::kLinearThreeN: return "3n";
    case ClassVerdict::kTwoNPlusOne: return "2n+1";
    case ClassVerdict::kDegenerate: return "degenerate";
    case ClassVerdict::kHiddenR2: return "hidden-r2";
    case ClassVerdict::kConjecturedThreeN: return "conjectured-3n";
    case ClassVerdict::kCounterexample: return "counterexample";
  }
  throw DomainError("verdict_name: unknown verdict");
}

namespace {

struct RepRow {
  const char* name;
  bool starred;
  ClassVerdict verdict;
};

constexpr RepRow kReps[] = {
    {"(e,e,e)", false, ClassVerdict::kLinearThreeN},
    {"(e,12,e)", false, ClassVerdict::kDegenerate},
    {"(e,13,e)", false, ClassVerdict::kHiddenR2},
    {"(e,23,e)", false, ClassVerdict::kConjecturedThreeN},
    {"(e,123,e)", false, ClassVerdict::kCounterexample},
    {"(e,132,e)", true, ClassVerdict::kDegenerate},
    {"(e,e,12)", false, ClassVerdict::kCounterexample},
    {"(e,12,12)", false, ClassVerdict::kCounterexample},
    {"(e,13,12)", true, ClassVerdict::kCounterexample},
    {"(e,23,12)", false, ClassVerdict::kCounterexample},
    {"(e,123,12)", false, ClassVerdict::kCounterexample},
    {"(e,e,13)", false, ClassVerdict::kCounterexample},
    {"(e,12,13)", true, ClassVerdict::kDegenerate},
    {"(e,23,13)", false, ClassVerdict::kCounterexample},
    {"(e,123,13)", false, ClassVerdict::kCounterexample},
    {"(e,e,23)", false, ClassVerdict::kCounterexample},
    {"(e,23,23)", true, ClassVerdict::kTwoNPlusOne},
    {"(e,123,23)", false, ClassVerdict::kCounterexample},
    {"(e,e,123)", false, ClassVerdict::kCounterexample},
    {"(e,123,123)", true, ClassVerdict::kCounterexample},
    {"(e,e,132)", true, ClassVerdict::kCounterexample},
};

std::vector<TripClass> build_classes() {
  std::vector<TripClass> classes;
  classes.reserve(std::size(kReps));
  std::vector<TripTriple> covered;
  for (const auto& row : kReps) {
    auto rep = TripTriple::parse(row.name);
    if (!rep) throw DomainError(std::string("class table: bad representative ") + row.name);
    TripClass c;
    c.representative = *rep;
    c.starred = row.starred;
    c.verdict = row.verdict;
    c.members = equivalence_class(*rep);
    size_t want = row.starred ? 6 : 12;
    if (c.members.size() != want) {
      throw DomainError(std::string("class table: ") + row.name + " has " +
                        std::to_string(c.members.size()) + " members, expected " +
                        std::to_string(want));
    }
    covered.insert(covered.end(), c.members.begin(), c.members.end());
    classes.push_back(std::move(c));
  }
  std::sort(covered.begin(), covered.end());
  if (covered.size() != 216 ||
      std::adjacent_find(covered.begin(), covered.end()) != covered.end()) {
    throw DomainError("class table: classes do not partition the 216 triples");
  }
  return classes;
}

}  // namespace

const std::vector<TripClass>& enumerate_classes() {
  static const std::vector<TripClass> classes = build_classes();
  return classes;
}

const TripClass& class_of(const TripTriple& t) {
  for (const auto& c : enumerate_classes()) {
    if (std::binary_search(c.members.begin(), c.members.end(), t)) return c;
  }
  throw DomainError("class_of: triple not covered by the class table");
}

}  // namespace trip

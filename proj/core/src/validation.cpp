#include <algorithm>
#include <sstream>

#include "prosopo/corpus.hpp"

namespace prosopo {
namespace {

std::string describe_roles(const RoleSet& roles) {
  std::string out;
  for (auto role : roles) {
    if (!out.empty()) out += ",";
    out += to_string(role);
  }
  return out;
}

void check_articles(const Corpus& corpus, std::vector<Finding>& out) {
  const auto& cfg = corpus.config();
  for (const auto& a : corpus.articles()) {
    if (a.year < cfg.min_year || a.year > cfg.max_year) {
      out.push_back({a.id, "invariant",
                     "year " + std::to_string(a.year) + " outside [" + std::to_string(cfg.min_year) +
                         ", " + std::to_string(cfg.max_year) + "]"});
    }
    for (const auto& r : a.references) {
      if (r.author_surface.empty()) out.push_back({a.id, "invariant", "reference with empty author"});
    }
    for (const auto& m : a.mentions) {
      if (m.surface.empty()) out.push_back({a.id, "invariant", "mention with empty surface"});
    }
    for (const auto& m : corpus.mentions_of(a.id)) {
      if (m.roles.empty()) {
        out.push_back({a.id, "invariant", "mention '" + m.key + "' has no role"});
      } else if (m.roles.count(MentionRole::unresolved) && m.roles.size() > 1) {
        out.push_back({a.id, "invariant",
                       "mention '" + m.key + "' mixes unresolved with other roles: " + describe_roles(m.roles)});
      }
    }
    if (a.translation_of && !corpus.find_article(*a.translation_of)) {
      out.push_back({a.id, "warning", "translation_of '" + *a.translation_of + "' is not in the corpus"});
    }
  }
}

void check_persons(const Corpus& corpus, std::vector<Finding>& out) {
  for (const auto& p : corpus.persons()) {
    if (p.birth_year && p.death_year && !(*p.birth_year < *p.death_year)) {
      out.push_back({p.key, "invariant",
                     "birth_year " + std::to_string(*p.birth_year) + " is not before death_year " +
                         std::to_string(*p.death_year)});
    }
  }
  for (const auto& l : corpus.links()) {
    if (l.a == l.b) out.push_back({"link:" + l.a + "-" + l.b, "invariant", "link joins a person to itself"});
    if (l.period && l.period->from_year > l.period->to_year) {
      out.push_back({"link:" + l.a + "-" + l.b, "invariant", "link period ends before it starts"});
    }
  }
}

void check_tenures(const Corpus& corpus, std::vector<Finding>& out) {
  const auto tenures = corpus.tenures();
  for (std::size_t i = 0; i < tenures.size(); ++i) {
    const auto& t = tenures[i];
    if (t.to_year && *t.to_year < t.from_year) {
      out.push_back({"tenure:" + t.journal_key, "invariant",
                     "tenure from " + std::to_string(t.from_year) + " ends before it starts"});
    }
    for (std::size_t j = i + 1; j < tenures.size() && tenures[j].journal_key == t.journal_key; ++j) {
      const auto& u = tenures[j];
      const bool overlap = (!t.to_year || u.from_year <= *t.to_year) && (!u.to_year || t.from_year <= *u.to_year);
      if (overlap) {
        out.push_back({"tenure:" + t.journal_key, "invariant",
                       "tenures starting " + std::to_string(t.from_year) + " and " +
                           std::to_string(u.from_year) + " overlap"});
      }
    }
  }
}

void check_liveness(const Corpus& corpus, std::vector<Finding>& out) {
  for (const auto& m : corpus.mentions()) {
    // Bylines and eponymous phrases are not printed references to a person.
    if (!m.person || m.roles.count(MentionRole::object_eponym) || m.roles.count(MentionRole::journal_eponym) ||
        m.roles.count(MentionRole::author)) {
      continue;
    }
    const Person* person = corpus.find_person(*m.person);
    const Article* article = corpus.find_article(m.article_id);
    for (const auto& surface : m.surfaces) {
      const auto name = normalize_surface(surface, corpus.config());
      const Liveness verdict = liveness_check(name, *person, article->year, corpus.config());
      if (verdict != Liveness::anomaly_m_for_dead && verdict != Liveness::anomaly_bare_for_living) continue;
      std::ostringstream msg;
      msg << "'" << surface << "' " << to_string(verdict) << " (" << person->key << " died "
          << *person->death_year << ", article " << article->year << ")";
      out.push_back({m.article_id, "liveness", msg.str()});
    }
  }
}

}  // namespace

ValidationReport validate_corpus(const Corpus& corpus) {
  ValidationReport report;
  auto& f = report.findings;
  f.assign(corpus.warnings().begin(), corpus.warnings().end());
  check_articles(corpus, f);
  check_persons(corpus, f);
  check_tenures(corpus, f);
  check_liveness(corpus, f);
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());

  for (const auto& m : corpus.mentions()) {
    if (!m.person) ++report.unresolved_mentions;
  }
  for (const auto& a : corpus.articles()) {
    for (const auto& r : a.references) {
      if (!resolve_person(normalize_surface(r.author_surface, corpus.config()), corpus)) {
        ++report.unresolved_references;
      }
    }
  }
  return report;
}

std::string ValidationReport::render() const {
  std::ostringstream out;
  out << "findings: " << findings.size() << '\n'
      << "unresolved_mentions: " << unresolved_mentions << '\n'
      << "unresolved_references: " << unresolved_references << '\n';
  for (const auto& finding : findings) {
    out << '[' << finding.category << "] " << finding.record << ": " << finding.message << '\n';
  }
  return out.str();
}

}  // namespace prosopo

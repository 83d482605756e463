#include "records_json.hpp"

namespace prosopo::detail {
namespace {

const json& empty_array() {
  static const json value = json::array();
  return value;
}

template <typename T>
void put(json& out, const char* key, const std::optional<T>& value) {
  if (value) out[key] = *value;
}

std::vector<MentionRole> roles_from(const json& value) {
  std::vector<MentionRole> roles;
  for (const auto& item : value) {
    if (!item.is_string()) throw SchemaError("declared_roles entries must be strings");
    auto role = parse_mention_role(item.get<std::string>());
    if (!role) throw SchemaError("unknown mention role '" + item.get<std::string>() + "'");
    roles.push_back(*role);
  }
  return roles;
}

}  // namespace

ObjectReader::ObjectReader(const json& value, std::string_view what, bool lenient)
    : value_(value), what_(what), lenient_(lenient) {
  if (!value_.is_object()) throw SchemaError(what_ + " must be a JSON object");
}

const json* ObjectReader::field(const char* key, bool required) {
  seen_.insert(key);
  auto it = value_.find(key);
  if (it == value_.end() || it->is_null()) {
    if (required) throw SchemaError(what_ + ": missing field '" + key + "'");
    return nullptr;
  }
  return &*it;
}

bool ObjectReader::has(const char* key) const {
  auto it = value_.find(key);
  return it != value_.end() && !it->is_null();
}

std::string ObjectReader::string(const char* key) {
  const json* v = field(key, true);
  if (!v->is_string()) throw SchemaError(what_ + ": field '" + key + "' must be a string");
  return v->get<std::string>();
}

std::optional<std::string> ObjectReader::optional_string(const char* key) {
  const json* v = field(key, false);
  if (!v) return std::nullopt;
  if (!v->is_string()) throw SchemaError(what_ + ": field '" + key + "' must be a string");
  return v->get<std::string>();
}

int ObjectReader::integer(const char* key) {
  const json* v = field(key, true);
  if (!v->is_number_integer()) throw SchemaError(what_ + ": field '" + key + "' must be an integer");
  return v->get<int>();
}

std::optional<int> ObjectReader::optional_integer(const char* key) {
  const json* v = field(key, false);
  if (!v) return std::nullopt;
  if (!v->is_number_integer()) throw SchemaError(what_ + ": field '" + key + "' must be an integer");
  return v->get<int>();
}

std::vector<std::string> ObjectReader::strings(const char* key) {
  std::vector<std::string> out;
  for (const auto& item : array(key)) {
    if (!item.is_string()) throw SchemaError(what_ + ": field '" + key + "' must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

const json& ObjectReader::array(const char* key) {
  const json* v = field(key, false);
  if (!v) return empty_array();
  if (!v->is_array()) throw SchemaError(what_ + ": field '" + key + "' must be an array");
  return *v;
}

const json* ObjectReader::optional_object(const char* key) {
  const json* v = field(key, false);
  if (v && !v->is_object()) throw SchemaError(what_ + ": field '" + key + "' must be an object");
  return v;
}

void ObjectReader::finish() const {
  if (lenient_) return;
  for (auto it = value_.begin(); it != value_.end(); ++it) {
    if (!seen_.count(it.key())) throw SchemaError(what_ + ": unknown field '" + it.key() + "'");
  }
}

json to_json(const Article& a) {
  json out = json::object();
  out["id"] = a.id;
  out["venue"] = a.venue;
  put(out, "volume", a.volume);
  out["year"] = a.year;
  put(out, "pages", a.pages);
  out["kind"] = std::string(to_string(a.kind));
  json classes = json::array();
  for (const auto& c : a.classifications) {
    classes.push_back({{"taxonomy_id", c.taxonomy_id}, {"rubric", c.rubric}});
  }
  out["classifications"] = std::move(classes);
  out["keywords"] = a.keywords;
  json refs = json::array();
  for (const auto& r : a.references) {
    json ref = {{"author_surface", r.author_surface}};
    put(ref, "venue_surface", r.venue_surface);
    put(ref, "year", r.year);
    put(ref, "volume", r.volume);
    put(ref, "note", r.note);
    refs.push_back(std::move(ref));
  }
  out["references"] = std::move(refs);
  json mentions = json::array();
  for (const auto& m : a.mentions) {
    json mention = {{"surface", m.surface}};
    put(mention, "context", m.context);
    if (m.declared_roles) {
      json roles = json::array();
      for (auto role : *m.declared_roles) roles.push_back(std::string(to_string(role)));
      mention["declared_roles"] = std::move(roles);
    }
    mentions.push_back(std::move(mention));
  }
  out["mentions"] = std::move(mentions);
  put(out, "language", a.language);
  put(out, "translation_of", a.translation_of);
  return out;
}

Article article_from_json(const json& value, bool lenient) {
  ObjectReader r(value, "article", lenient);
  Article a;
  a.id = r.string("id");
  a.venue = r.string("venue");
  a.volume = r.optional_string("volume");
  a.year = r.integer("year");
  a.pages = r.optional_string("pages");
  const std::string kind = r.string("kind");
  auto parsed = parse_article_kind(kind);
  if (!parsed) throw SchemaError("article: unknown kind '" + kind + "'");
  a.kind = *parsed;
  for (const auto& item : r.array("classifications")) {
    ObjectReader c(item, "classification", lenient);
    a.classifications.push_back({c.string("taxonomy_id"), c.string("rubric")});
    c.finish();
  }
  a.keywords = r.strings("keywords");
  for (const auto& item : r.array("references")) {
    ObjectReader c(item, "reference", lenient);
    RawReference ref;
    ref.author_surface = c.string("author_surface");
    if (ref.author_surface.empty()) throw SchemaError("reference: empty author_surface");
    ref.venue_surface = c.optional_string("venue_surface");
    ref.year = c.optional_integer("year");
    ref.volume = c.optional_string("volume");
    ref.note = c.optional_string("note");
    c.finish();
    a.references.push_back(std::move(ref));
  }
  for (const auto& item : r.array("mentions")) {
    ObjectReader c(item, "mention", lenient);
    RawMention m;
    m.surface = c.string("surface");
    if (m.surface.empty()) throw SchemaError("mention: empty surface");
    m.context = c.optional_string("context");
    if (c.has("declared_roles")) m.declared_roles = roles_from(c.array("declared_roles"));
    c.finish();
    a.mentions.push_back(std::move(m));
  }
  a.language = r.optional_string("language");
  a.translation_of = r.optional_string("translation_of");
  r.finish();
  return a;
}

json to_json(const Person& p) {
  json out = json::object();
  out["key"] = p.key;
  out["display_name"] = p.display_name;
  put(out, "birth_year", p.birth_year);
  put(out, "death_year", p.death_year);
  json places = json::array();
  for (const auto& w : p.workplaces) {
    json place = {{"region", w.region}};
    put(place, "from_year", w.from_year);
    put(place, "to_year", w.to_year);
    places.push_back(std::move(place));
  }
  out["workplaces"] = std::move(places);
  out["professions"] = p.professions;
  out["memberships"] = p.memberships;
  out["notes"] = p.notes;
  return out;
}

Person person_from_json(const json& value, bool lenient) {
  ObjectReader r(value, "person", lenient);
  Person p;
  p.key = r.string("key");
  p.display_name = r.optional_string("display_name").value_or(p.key);
  p.birth_year = r.optional_integer("birth_year");
  p.death_year = r.optional_integer("death_year");
  for (const auto& item : r.array("workplaces")) {
    ObjectReader w(item, "workplace", lenient);
    p.workplaces.push_back({w.string("region"), w.optional_integer("from_year"),
                            w.optional_integer("to_year")});
    w.finish();
  }
  p.professions = r.strings("professions");
  p.memberships = r.strings("memberships");
  p.notes = r.optional_string("notes").value_or("");
  r.finish();
  return p;
}

json to_json(const Alias& a) {
  json out = {{"surface_key", a.surface_key}};
  put(out, "person_key", a.person_key);
  put(out, "journal_key", a.journal_key);
  return out;
}

Alias alias_from_json(const json& value, bool lenient) {
  ObjectReader r(value, "alias", lenient);
  Alias a;
  a.surface_key = r.string("surface_key");
  a.person_key = r.optional_string("person_key");
  a.journal_key = r.optional_string("journal_key");
  r.finish();
  if (a.person_key.has_value() == a.journal_key.has_value()) {
    throw SchemaError("alias: exactly one of person_key and journal_key is required");
  }
  return a;
}

json to_json(const EditorTenure& t) {
  json out = {{"journal_key", t.journal_key}, {"editors", t.editors}, {"from_year", t.from_year}};
  put(out, "to_year", t.to_year);
  return out;
}

EditorTenure tenure_from_json(const json& value, bool lenient) {
  ObjectReader r(value, "tenure", lenient);
  EditorTenure t;
  t.journal_key = r.string("journal_key");
  t.editors = r.strings("editors");
  if (t.editors.empty()) throw SchemaError("tenure: editors must not be empty");
  t.from_year = r.integer("from_year");
  t.to_year = r.optional_integer("to_year");
  r.finish();
  return t;
}

json to_json(const PersonalLink& l) {
  json out = {{"a", l.a}, {"b", l.b}, {"link_kind", std::string(to_string(l.link_kind))}};
  if (l.period) out["period"] = {{"from_year", l.period->from_year}, {"to_year", l.period->to_year}};
  return out;
}

PersonalLink link_from_json(const json& value, bool lenient) {
  ObjectReader r(value, "link", lenient);
  PersonalLink l;
  l.a = r.string("a");
  l.b = r.string("b");
  const std::string kind = r.string("link_kind");
  auto parsed = parse_link_kind(kind);
  if (!parsed) throw SchemaError("link: unknown link_kind '" + kind + "'");
  l.link_kind = *parsed;
  if (const json* period = r.optional_object("period")) {
    ObjectReader p(*period, "period", lenient);
    l.period = YearRange{p.integer("from_year"), p.integer("to_year")};
    p.finish();
  }
  r.finish();
  return l;
}

json to_json(const ResolverConfig& c) {
  json rules = json::array();
  for (const auto& rule : c.role_rules) {
    rules.push_back({{"pattern", rule.pattern}, {"role", std::string(to_string(rule.role))}});
  }
  return {{"avant_noms", c.avant_noms},
          {"liveness_markers", c.liveness_markers},
          {"qualifiers", c.qualifiers},
          {"genitive_markers", c.genitive_markers},
          {"role_rules", std::move(rules)},
          {"year_bounds", {c.min_year, c.max_year}}};
}

ResolverConfig config_from_json(const json& value) {
  if (!value.is_object()) throw SchemaError("configuration must be a JSON object");
  ResolverConfig c;
  auto strings = [&](const char* key, std::vector<std::string>& out) {
    auto it = value.find(key);
    if (it == value.end()) return;
    if (!it->is_array()) throw SchemaError(std::string("config: '") + key + "' must be an array");
    out.clear();
    for (const auto& item : *it) {
      if (!item.is_string()) throw SchemaError(std::string("config: '") + key + "' must hold strings");
      out.push_back(item.get<std::string>());
    }
  };
  strings("avant_noms", c.avant_noms);
  strings("liveness_markers", c.liveness_markers);
  strings("qualifiers", c.qualifiers);
  strings("genitive_markers", c.genitive_markers);
  if (auto it = value.find("role_rules"); it != value.end()) {
    if (!it->is_array()) throw SchemaError("config: 'role_rules' must be an array");
    c.role_rules.clear();
    for (const auto& item : *it) {
      ObjectReader r(item, "role_rule", false);
      const std::string pattern = r.string("pattern");
      const std::string role = r.string("role");
      auto parsed = parse_mention_role(role);
      if (!parsed) throw SchemaError("config: unknown role '" + role + "'");
      r.finish();
      c.role_rules.push_back({pattern, *parsed});
    }
  }
  if (auto it = value.find("year_bounds"); it != value.end()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_integer() ||
        !(*it)[1].is_number_integer()) {
      throw SchemaError("config: 'year_bounds' must be [min, max]");
    }
    c.min_year = (*it)[0].get<int>();
    c.max_year = (*it)[1].get<int>();
  }
  return c;
}

}  // namespace prosopo::detail

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "prosopo/analytics.hpp"
#include "prosopo/corpus.hpp"
#include "prosopo/error.hpp"

namespace prosopo {
namespace {

// Display width in code points; every label in use is single-width.
std::size_t display_width(std::string_view text) {
  return static_cast<std::size_t>(
      std::count_if(text.begin(), text.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad_right(std::string_view text, std::size_t width) {
  std::string out(text);
  out.append(width - std::min(width, display_width(text)), ' ');
  return out;
}

std::string pad_left(std::string_view text, std::size_t width) {
  return std::string(width - std::min(width, display_width(text)), ' ') + std::string(text);
}

std::string rtrim(std::string line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void check_shape(const CrossTab& tab) {
  if (tab.cells.size() != tab.rows.size()) throw InvalidArgument("crosstab: one cell row per period required");
  for (const auto& row : tab.cells) {
    if (row.size() != tab.cols.size()) throw InvalidArgument("crosstab: every row needs one cell per column");
  }
  if (tab.all.size() != tab.cols.size()) throw InvalidArgument("crosstab: all-periods row has the wrong width");
}

}  // namespace

CrossTab generation_crosstab(const Corpus& corpus, const PeriodScheme& periods, const CohortScheme& cohorts,
                             const CitedFilter& filter) {
  periods.check();
  const auto bins = cohorts.bins();
  const std::size_t overflow = bins.size();
  const std::size_t unknown = bins.size() + 1;

  // (period, column slot) -> persons; slots beyond the regular bins are
  // laid out only when populated.
  std::vector<std::vector<std::set<std::string>>> cells(periods.size(),
                                                        std::vector<std::set<std::string>>(bins.size() + 2));
  for (const auto& m : corpus.mentions()) {
    if (!m.person || !filter.accepts(m.roles)) continue;
    const auto p = periods.period_of(corpus.find_article(m.article_id)->year);
    if (!p) continue;
    const Person* person = corpus.find_person(*m.person);
    const std::size_t slot = person->birth_year ? cohorts.bin_index(*person->birth_year) : unknown;
    cells[*p][slot].insert(person->key);
  }

  std::vector<std::size_t> slots(bins.size());
  for (std::size_t i = 0; i < bins.size(); ++i) slots[i] = i;
  auto used = [&](std::size_t slot) {
    return std::any_of(cells.begin(), cells.end(), [&](const auto& row) { return !row[slot].empty(); });
  };
  if (used(overflow)) slots.push_back(overflow);
  if (used(unknown)) slots.push_back(unknown);

  CrossTab tab;
  tab.rows = periods.labels;
  tab.all_label = periods.all_label;
  for (std::size_t slot : slots) {
    if (slot < bins.size()) tab.cols.push_back(bins[slot].label());
    else if (slot == overflow) tab.cols.push_back(cohorts.overflow_bin().label());
    else tab.cols.push_back(CohortBin{}.label());
  }
  tab.cells.assign(periods.size(), std::vector<std::size_t>(slots.size(), 0));
  tab.all.assign(slots.size(), 0);
  for (std::size_t c = 0; c < slots.size(); ++c) {
    std::set<std::string> all_periods;
    for (std::size_t p = 0; p < periods.size(); ++p) {
      const auto& persons = cells[p][slots[c]];
      tab.cells[p][c] = persons.size();
      all_periods.insert(persons.begin(), persons.end());
    }
    tab.all[c] = all_periods.size();
  }
  return tab;
}

std::string render_crosstab(const CrossTab& tab, const RenderOptions& options) {
  check_shape(tab);
  auto cell_text = [&](std::size_t n) { return (n == 0 && options.blank_zeros) ? std::string() : std::to_string(n); };

  std::vector<std::size_t> widths(tab.cols.size() + 1, 0);
  widths[0] = display_width(tab.corner);
  for (const auto& r : tab.rows) widths[0] = std::max(widths[0], display_width(r));
  if (!tab.rows.empty()) widths[0] = std::max(widths[0], display_width(tab.all_label));
  for (std::size_t c = 0; c < tab.cols.size(); ++c) {
    widths[c + 1] = display_width(tab.cols[c]);
    for (const auto& row : tab.cells) widths[c + 1] = std::max(widths[c + 1], cell_text(row[c]).size());
    if (!tab.rows.empty()) widths[c + 1] = std::max(widths[c + 1], cell_text(tab.all[c]).size());
  }

  auto line = [&](std::string_view label, const std::vector<std::string>& cells) {
    std::string out = pad_right(label, widths[0]);
    for (std::size_t c = 0; c < cells.size(); ++c) out += " | " + pad_left(cells[c], widths[c + 1]);
    return rtrim(std::move(out)) + "\n";
  };

  std::string out = line(tab.corner, tab.cols);
  std::string rule(widths[0], '-');
  for (std::size_t c = 0; c < tab.cols.size(); ++c) rule += "-+-" + std::string(widths[c + 1], '-');
  out += rule + "\n";
  if (tab.rows.empty()) return out;
  for (std::size_t r = 0; r < tab.rows.size(); ++r) {
    std::vector<std::string> cells;
    for (auto n : tab.cells[r]) cells.push_back(cell_text(n));
    out += line(tab.rows[r], cells);
  }
  std::vector<std::string> all;
  for (auto n : tab.all) all.push_back(cell_text(n));
  out += line(tab.all_label, all);
  return out;
}

std::string render_crosstab_csv(const CrossTab& tab) {
  check_shape(tab);
  std::ostringstream out;
  out << csv_field(tab.corner);
  for (const auto& c : tab.cols) out << ',' << csv_field(c);
  out << '\n';
  for (std::size_t r = 0; r < tab.rows.size(); ++r) {
    out << csv_field(tab.rows[r]);
    for (auto n : tab.cells[r]) out << ',' << n;
    out << '\n';
  }
  if (!tab.rows.empty()) {
    out << csv_field(tab.all_label);
    for (auto n : tab.all) out << ',' << n;
    out << '\n';
  }
  return out.str();
}

CrossTab parse_crosstab_json(std::string_view json_text) {
  CrossTab tab;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    tab.corner = doc.value("corner", tab.corner);
    tab.rows = doc.at("rows").get<std::vector<std::string>>();
    tab.cols = doc.at("cols").get<std::vector<std::string>>();
    tab.cells = doc.at("cells").get<std::vector<std::vector<std::size_t>>>();
    tab.all_label = doc.value("all_label", tab.all_label);
    tab.all = doc.at("all").get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("crosstab document: ") + e.what());
  }
  check_shape(tab);
  for (std::size_t c = 0; c < tab.cols.size(); ++c) {
    std::size_t max = 0;
    std::size_t sum = 0;
    for (const auto& row : tab.cells) {
      max = std::max(max, row[c]);
      sum += row[c];
    }
    if (tab.all[c] < max || tab.all[c] > sum) {
      throw InvalidArgument("crosstab document: column '" + tab.cols[c] +
                            "' breaks max(cell) <= all-periods <= sum(cells)");
    }
  }
  return tab;
}

std::string crosstab_json(const CrossTab& tab) {
  nlohmann::ordered_json out;
  out["corner"] = tab.corner;
  out["rows"] = tab.rows;
  out["cols"] = tab.cols;
  out["cells"] = tab.cells;
  out["all_label"] = tab.all_label;
  out["all"] = tab.all;
  return out.dump(2) + "\n";
}

}  // namespace prosopo

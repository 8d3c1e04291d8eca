// Table rendering. Equal databases render to equal bytes: rows are emitted
// in degree order, histogram columns in a fixed label order, and numeric
// formatting never consults the locale.
#include "indgen/tables.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "indgen/analyze.hpp"

namespace indgen {

namespace {

using nlohmann::json;

// Column order of the symmetry table. Labels outside this list (none occur
// for degree <= 7) would be appended alphabetically.
const std::vector<std::string>& label_order() {
  static const std::vector<std::string> order = {
      "trivial", "Z2", "Z2xZ2", "Z3", "D4", "D6", "S3", "S4", "S5", "S6"};
  return order;
}

// Two decimals, truncated toward zero (so 31/178 renders as 17.41).
std::string truncated_pct(std::uint64_t part, std::uint64_t whole) {
  std::uint64_t scaled = whole == 0 ? 0 : part * 10000 / whole;
  std::string out = std::to_string(scaled / 100);
  out += '.';
  out += static_cast<char>('0' + scaled / 10 % 10);
  out += static_cast<char>('0' + scaled % 10);
  return out;
}

struct DegreeSummary {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t classes = 0;
  std::uint64_t generating = 0;
  std::uint64_t dead_ends = 0;
  std::map<int, std::size_t> sizes; // generating classes only
  std::optional<int> dia_min;
  std::optional<int> dia_max;
  std::map<std::string, std::size_t> symmetry; // generating classes only
  std::uint64_t incremental = 0;
};

std::vector<DegreeSummary> summarize(
    const std::vector<const ClassDatabase*>& by_degree) {
  if (by_degree.empty())
    throw std::invalid_argument("render_tables: need at least degree 1");
  std::vector<DegreeSummary> out;
  out.reserve(by_degree.size());
  for (std::size_t i = 0; i < by_degree.size(); ++i) {
    const ClassDatabase* db = by_degree[i];
    if (db == nullptr || db->degree != static_cast<int>(i) + 1)
      throw std::invalid_argument(
          "render_tables: databases must be non-null and in degree order "
          "starting at 1");
    DegreeSummary s;
    s.n = db->degree;
    s.total = db->total_independent_sets();
    s.classes = db->class_count();
    s.generating = db->generating_class_count();
    s.dead_ends = db->dead_end_class_count();
    s.sizes = size_distribution(*db);
    for (const ClassRecord& r : db->records) {
      if (r.diameter) {
        if (!s.dia_min || *r.diameter < *s.dia_min) s.dia_min = *r.diameter;
        if (!s.dia_max || *r.diameter > *s.dia_max) s.dia_max = *r.diameter;
      }
      if (r.classification.generating) ++s.symmetry[r.symmetry_label];
    }
    s.incremental = incremental_class_count(*db);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> symmetry_columns(
    const std::vector<DegreeSummary>& ds) {
  std::set<std::string> seen;
  for (const DegreeSummary& s : ds)
    for (const auto& [label, count] : s.symmetry)
      if (count > 0) seen.insert(label);
  std::vector<std::string> cols;
  for (const std::string& l : label_order())
    if (seen.erase(l) > 0) cols.push_back(l);
  cols.insert(cols.end(), seen.begin(), seen.end());
  return cols;
}

std::set<int> size_columns(const std::vector<DegreeSummary>& ds) {
  std::set<int> sizes;
  for (const DegreeSummary& s : ds)
    for (const auto& [size, count] : s.sizes)
      if (count > 0) sizes.insert(size);
  return sizes;
}

// First column left aligned, the rest right aligned, two spaces between
// columns, no trailing blanks.
std::string layout(const std::vector<std::vector<std::string>>& rows) {
  std::size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  std::vector<std::size_t> width(cols, 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c)
      width[c] = std::max(width[c], r[c].size());
  std::string out;
  for (const auto& r : rows) {
    std::string line = "  ";
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string cell = c < r.size() ? r[c] : std::string();
      if (c > 0) line += "  ";
      std::string pad(width[c] - cell.size(), ' ');
      line += (c == 0) ? cell + pad : pad + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string u64(std::uint64_t v) { return std::to_string(v); }

std::string render_text(const std::vector<DegreeSummary>& ds) {
  bool mark_degree1 = !ds.empty(); // degree 1 is always the first entry
  std::string out;

  {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head = {"n"};
    for (const DegreeSummary& s : ds) head.push_back(std::to_string(s.n));
    rows.push_back(head);
    std::vector<std::string> total = {"independent sets"};
    std::vector<std::string> classes = {"classes"};
    std::vector<std::string> gen = {"generating classes"};
    for (const DegreeSummary& s : ds) {
      bool mark = mark_degree1 && s.n == 1;
      total.push_back(u64(s.total) + (mark ? "*" : ""));
      classes.push_back(u64(s.classes) + (mark ? "*" : ""));
      gen.push_back(u64(s.generating));
    }
    rows.push_back(total);
    rows.push_back(classes);
    rows.push_back(gen);
    out += "Table 1. Independent sets\n";
    out += layout(rows);
    if (mark_degree1)
      out += "  * degree 1 counts the empty set and the identity singleton "
             "as distinct independent sets\n";
    out += '\n';
  }

  {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head = {"n"};
    std::vector<std::string> dead = {"dead-end classes"};
    for (const DegreeSummary& s : ds) {
      head.push_back(std::to_string(s.n));
      bool mark = mark_degree1 && s.n == 1;
      dead.push_back(u64(s.dead_ends) + (mark ? "*" : ""));
    }
    rows.push_back(head);
    rows.push_back(dead);
    out += "Table 2. Dead ends\n";
    out += layout(rows);
    if (mark_degree1)
      out += "  * the identity singleton generates S1, so degree 1 has no "
             "dead end\n";
    out += '\n';
  }

  {
    std::set<int> sizes = size_columns(ds);
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head = {"n"};
    for (int size : sizes) head.push_back("size " + std::to_string(size));
    rows.push_back(head);
    for (const DegreeSummary& s : ds) {
      std::vector<std::string> row = {std::to_string(s.n)};
      for (int size : sizes) {
        auto it = s.sizes.find(size);
        std::size_t count = it == s.sizes.end() ? 0 : it->second;
        if (count == 0) {
          row.push_back("-");
        } else if (size == 2) {
          row.push_back(u64(count) + " (" +
                        truncated_pct(count, s.generating) + "%)");
        } else {
          row.push_back(u64(count));
        }
      }
      rows.push_back(row);
    }
    out += "Table 3. Sizes of generating classes\n";
    out += layout(rows);
    out += '\n';
  }

  {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head = {"n"};
    std::vector<std::string> lo = {"min diameter"};
    std::vector<std::string> hi = {"max diameter"};
    for (const DegreeSummary& s : ds) {
      head.push_back(std::to_string(s.n));
      lo.push_back(s.dia_min ? std::to_string(*s.dia_min) : "-");
      hi.push_back(s.dia_max ? std::to_string(*s.dia_max) : "-");
    }
    rows.push_back(head);
    rows.push_back(lo);
    rows.push_back(hi);
    out += "Table 4. Diameters\n";
    out += layout(rows);
    out += '\n';
  }

  {
    std::vector<std::string> cols = symmetry_columns(ds);
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head = {"n"};
    head.insert(head.end(), cols.begin(), cols.end());
    rows.push_back(head);
    for (const DegreeSummary& s : ds) {
      std::vector<std::string> row = {std::to_string(s.n)};
      for (const std::string& label : cols) {
        auto it = s.symmetry.find(label);
        std::size_t count = it == s.symmetry.end() ? 0 : it->second;
        row.push_back(count == 0 ? "-" : u64(count));
      }
      rows.push_back(row);
    }
    out += "Table 5. Symmetry groups of generating classes\n";
    out += layout(rows);
    out += '\n';
  }

  {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head = {"n"};
    std::vector<std::string> inc = {"incremental classes"};
    for (const DegreeSummary& s : ds) {
      head.push_back(std::to_string(s.n));
      inc.push_back(u64(s.incremental));
    }
    rows.push_back(head);
    rows.push_back(inc);
    out += "Table 6. Incremental generating classes\n";
    out += layout(rows);
  }

  return out;
}

std::string render_csv(const std::vector<DegreeSummary>& ds) {
  std::string out;
  if (!ds.empty())
    out += "# note: degree 1 counts the empty set and the identity singleton "
           "as distinct independent sets; the identity singleton generates, "
           "so there is no dead end\n";

  out += "# independent sets\n";
  out += "n,independent_sets,classes,generating_classes\n";
  for (const DegreeSummary& s : ds)
    out += std::to_string(s.n) + "," + u64(s.total) + "," + u64(s.classes) +
           "," + u64(s.generating) + "\n";

  out += "\n# dead ends\n";
  out += "n,dead_end_classes\n";
  for (const DegreeSummary& s : ds)
    out += std::to_string(s.n) + "," + u64(s.dead_ends) + "\n";

  out += "\n# generating set sizes\n";
  out += "n,size,classes,pct_of_generating\n";
  for (const DegreeSummary& s : ds)
    for (const auto& [size, count] : s.sizes)
      out += std::to_string(s.n) + "," + std::to_string(size) + "," +
             u64(count) + "," + truncated_pct(count, s.generating) + "\n";

  out += "\n# diameters\n";
  out += "n,min,max\n";
  for (const DegreeSummary& s : ds)
    out += std::to_string(s.n) + "," +
           (s.dia_min ? std::to_string(*s.dia_min) : "") + "," +
           (s.dia_max ? std::to_string(*s.dia_max) : "") + "\n";

  out += "\n# symmetry groups\n";
  out += "n,label,classes\n";
  std::vector<std::string> cols = symmetry_columns(ds);
  for (const DegreeSummary& s : ds)
    for (const std::string& label : cols) {
      auto it = s.symmetry.find(label);
      if (it != s.symmetry.end() && it->second > 0)
        out += std::to_string(s.n) + "," + label + "," + u64(it->second) +
               "\n";
    }

  out += "\n# incremental\n";
  out += "n,incremental_classes\n";
  for (const DegreeSummary& s : ds)
    out += std::to_string(s.n) + "," + u64(s.incremental) + "\n";

  return out;
}

std::string render_json(const std::vector<DegreeSummary>& ds) {
  json root = json::object();
  if (!ds.empty())
    root["note"] =
        "degree 1 counts the empty set and the identity singleton as "
        "distinct independent sets; the identity singleton generates, so "
        "there is no dead end";

  json counts = json::array();
  json dead = json::array();
  json sizes = json::array();
  json diameters = json::array();
  json symmetry = json::array();
  json incremental = json::array();
  for (const DegreeSummary& s : ds) {
    counts.push_back({{"n", s.n},
                      {"independent_sets", s.total},
                      {"classes", s.classes},
                      {"generating_classes", s.generating}});
    dead.push_back({{"n", s.n}, {"classes", s.dead_ends}});

    json by_size = json::object();
    for (const auto& [size, count] : s.sizes)
      by_size[std::to_string(size)] = count;
    json row = {{"n", s.n}, {"by_size", by_size}};
    auto two = s.sizes.find(2);
    if (two != s.sizes.end() && two->second > 0)
      row["size_2_pct"] = truncated_pct(two->second, s.generating);
    sizes.push_back(row);

    json dia = {{"n", s.n}};
    dia["min"] = s.dia_min ? json(*s.dia_min) : json(nullptr);
    dia["max"] = s.dia_max ? json(*s.dia_max) : json(nullptr);
    diameters.push_back(dia);

    json hist = json::object();
    for (const auto& [label, count] : s.symmetry)
      if (count > 0) hist[label] = count;
    symmetry.push_back({{"n", s.n}, {"histogram", hist}});

    incremental.push_back({{"n", s.n}, {"classes", s.incremental}});
  }
  root["counts"] = counts;
  root["dead_ends"] = dead;
  root["sizes"] = sizes;
  root["diameters"] = diameters;
  root["symmetry"] = symmetry;
  root["incremental"] = incremental;
  return root.dump(2) + "\n";
}

} // namespace

std::optional<OutputFormat> format_from_string(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
  }
  throw std::invalid_argument("unknown output format");
}

std::string render_tables(const std::vector<const ClassDatabase*>& by_degree,
                          OutputFormat format) {
  std::vector<DegreeSummary> ds = summarize(by_degree);
  switch (format) {
    case OutputFormat::Text: return render_text(ds);
    case OutputFormat::Csv: return render_csv(ds);
    case OutputFormat::Json: return render_json(ds);
  }
  throw std::invalid_argument("unknown output format");
}

} // namespace indgen

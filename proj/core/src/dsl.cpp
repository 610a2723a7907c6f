#include "trisect/dsl.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace trisect {

namespace {

struct Line {
  int number = 0;        // 1-based
  std::string text;      // comment stripped, not trimmed
  std::string trimmed;
  int indent_column = 1;  // column of the first non-space character
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view raw =
        end == std::string_view::npos ? text.substr(start) : text.substr(start, end - start);
    Line line;
    line.number = number++;
    std::string s(raw);
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    line.text = s;
    std::size_t first = s.find_first_not_of(" \t");
    if (first != std::string::npos) {
      line.trimmed = s.substr(first);
      line.indent_column = static_cast<int>(first) + 1;
    }
    lines.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

// Splits on the first run of whitespace: "genus 3" -> ("genus", "3").
std::pair<std::string, std::string> key_rest(const std::string& s) {
  std::size_t sp = s.find_first_of(" \t");
  if (sp == std::string::npos) return {s, ""};
  std::size_t rest = s.find_first_not_of(" \t", sp);
  return {s.substr(0, sp), rest == std::string::npos ? "" : s.substr(rest)};
}

int parse_nonnegative_int(const Line& line, const std::string& s, const char* what) {
  if (s.empty()) throw ParseError(line.number, 1, std::string("missing ") + what);
  long long value = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(line.number, 1, std::string("bad ") + what + ": '" + s + "'");
    value = value * 10 + (c - '0');
    if (value > 1'000'000) throw ParseError(line.number, 1, std::string(what) + " too large");
  }
  return static_cast<int>(value);
}

Word parse_word_at(const Line& line, const std::string& text, int column_base) {
  WordSyntaxError err;
  auto w = try_parse_word(text, &err);
  if (!w) throw ParseError(line.number, column_base + static_cast<int>(err.offset), err.message);
  return *w;
}

std::vector<Word> parse_word_list(const Line& line, const std::string& text, int column_base) {
  std::vector<Word> words;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    words.push_back(parse_word_at(line, piece, column_base + static_cast<int>(start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return words;
}

struct MapBlock {
  Line header;
  std::map<int, std::pair<Line, Word>> images;  // alphabet position -> image
  std::optional<std::pair<Line, std::vector<Word>>> cuts;
};

void check_image_word(const Line& line, const Word& w, int genus) {
  Alphabet handle{AlphabetKind::FreeX, genus};
  for (const Letter& l : w.letters())
    if (!handle.contains(l))
      throw ParseError(line.number, 1,
                       "image letter " + to_string(l) + " is outside x1..x" + std::to_string(genus));
}

void check_surface_word(const Line& line, const Word& w, int genus) {
  Alphabet surface{AlphabetKind::Surface, genus};
  for (const Letter& l : w.letters())
    if (!surface.contains(l))
      throw ParseError(line.number, 1,
                       "cut letter " + to_string(l) + " is outside the genus-" +
                           std::to_string(genus) + " surface alphabet");
}

}  // namespace

GroupTrisection parse_trisection(std::string_view text) {
  std::vector<Line> lines = split_lines(text);

  bool version_seen = false;
  std::optional<std::string> name;
  std::optional<std::pair<Line, int>> genus, rank, target_gens;
  std::optional<std::pair<Line, std::vector<Word>>> target_relators;
  std::map<int, MapBlock> maps;
  MapBlock* current_map = nullptr;

  for (const Line& line : lines) {
    if (line.trimmed.empty()) continue;
    auto [key, rest] = key_rest(line.trimmed);

    if (!version_seen) {
      if (key != "trisection")
        throw ParseError(line.number, line.indent_column, "expected header 'trisection v1'");
      if (rest != "v1")
        throw ParseError(line.number, line.indent_column, "unrecognized format version '" + rest + "'");
      version_seen = true;
      continue;
    }

    if (key == "trisection") throw ParseError(line.number, line.indent_column, "duplicate header");
    if (key == "name") {
      if (rest.empty()) throw ParseError(line.number, line.indent_column, "empty name");
      name = rest;
      continue;
    }
    if (key == "genus") {
      genus = {line, parse_nonnegative_int(line, rest, "genus")};
      continue;
    }
    if (key == "k") {
      rank = {line, parse_nonnegative_int(line, rest, "k")};
      continue;
    }
    if (key == "map") {
      int sector = parse_nonnegative_int(line, rest, "map sector");
      if (sector < 1 || sector > 3)
        throw ParseError(line.number, line.indent_column, "map sector must be 1, 2 or 3");
      if (maps.count(sector))
        throw ParseError(line.number, line.indent_column, "duplicate map block " + rest);
      maps[sector] = MapBlock{line, {}, std::nullopt};
      current_map = &maps[sector];
      continue;
    }
    if (key == "cuts:") {
      if (!current_map) throw ParseError(line.number, line.indent_column, "cuts: outside a map block");
      if (current_map->cuts)
        throw ParseError(line.number, line.indent_column, "duplicate cuts: line in this map block");
      int base = line.indent_column + 5;  // past "cuts:"
      current_map->cuts = {line, rest.empty() ? std::vector<Word>{} : parse_word_list(line, rest, base)};
      continue;
    }
    if (key == "target:") {
      if (target_relators)
        throw ParseError(line.number, line.indent_column, "duplicate target: line");
      int base = line.indent_column + 7;
      target_relators = {line, parse_word_list(line, rest, base)};
      continue;
    }
    if (key == "target-gens:") {
      target_gens = {line, parse_nonnegative_int(line, rest, "target-gens")};
      continue;
    }

    // Generator image line: "<a|b><i> -> <word>".
    if (!genus)
      throw ParseError(line.number, line.indent_column, "genus must be declared before map blocks");
    if (!current_map)
      throw ParseError(line.number, line.indent_column,
                       "unrecognized key '" + key + "' (or image line outside a map block)");
    std::size_t arrow = line.trimmed.find("->");
    if (arrow == std::string::npos)
      throw ParseError(line.number, line.indent_column,
                       "expected '<generator> -> <word>' inside the map block");
    std::string lhs = line.trimmed.substr(0, arrow);
    while (!lhs.empty() && (lhs.back() == ' ' || lhs.back() == '\t')) lhs.pop_back();
    Word gen_word = parse_word_at(line, lhs, line.indent_column);
    Alphabet surface{AlphabetKind::Surface, genus->second};
    if (gen_word.size() != 1 || gen_word[0].sign != 1 || !surface.contains(gen_word[0]))
      throw ParseError(line.number, line.indent_column,
                       "left side must be a single surface generator a1..b" +
                           std::to_string(genus->second));
    int pos = *surface.position(gen_word[0]);
    if (current_map->images.count(pos))
      throw ParseError(line.number, line.indent_column,
                       "duplicate image for generator " + to_string(gen_word[0]));
    std::string rhs = line.trimmed.substr(arrow + 2);
    int rhs_col = line.indent_column + static_cast<int>(arrow) + 2;
    Word image = parse_word_at(line, rhs, rhs_col);
    check_image_word(line, image, genus->second);
    current_map->images[pos] = {line, image};
  }

  if (!version_seen) throw ParseError(1, 1, "empty document; expected 'trisection v1'");
  if (!genus) throw ParseError(1, 1, "missing 'genus' line");
  if (!rank) throw ParseError(1, 1, "missing 'k' line");
  int g = genus->second, k = rank->second;
  if (g < k)
    throw ParseError(rank->first.number, 1,
                     "k = " + std::to_string(k) + " exceeds genus " + std::to_string(g));

  std::array<std::optional<HandlebodyMap>, 3> built;
  for (int sector = 1; sector <= 3; ++sector) {
    auto it = maps.find(sector);
    if (it == maps.end()) throw ParseError(1, 1, "missing 'map " + std::to_string(sector) + "' block");
    MapBlock& block = it->second;
    std::vector<Word> images(2 * g);
    for (int pos = 0; pos < 2 * g; ++pos) {
      auto img = block.images.find(pos);
      if (img == block.images.end()) {
        Alphabet surface{AlphabetKind::Surface, g};
        throw ParseError(block.header.number, block.header.indent_column,
                         "map " + std::to_string(sector) + " is missing an image for " +
                             to_string(surface.generator(pos)));
      }
      images[pos] = img->second.second;
    }
    std::optional<std::vector<Word>> cuts;
    if (block.cuts) {
      if (static_cast<int>(block.cuts->second.size()) != g ||
          (g == 0 && !block.cuts->second.empty()))
        throw ParseError(block.cuts->first.number, block.cuts->first.indent_column,
                         "cut system must contain exactly " + std::to_string(g) + " words");
      for (const Word& c : block.cuts->second) check_surface_word(block.cuts->first, c, g);
      cuts = block.cuts->second;
    }
    built[sector - 1] = HandlebodyMap::from_images(g, std::move(images), std::move(cuts));
  }

  std::optional<Presentation> target;
  if (target_relators || target_gens) {
    int n = target_gens ? target_gens->second : g;
    std::vector<Word> rels;
    if (target_relators) {
      Alphabet handle{AlphabetKind::FreeX, n};
      for (const Word& r : target_relators->second) {
        for (const Letter& l : r.letters())
          if (!handle.contains(l))
            throw ParseError(target_relators->first.number, 1,
                             "target relator letter " + to_string(l) + " is outside x1..x" +
                                 std::to_string(n));
        rels.push_back(r);
      }
    }
    std::vector<Letter> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(make_letter(Family::X, i));
    target = Presentation(std::move(gens), std::move(rels));
  }

  GroupTrisection t(g, k, {std::move(*built[0]), std::move(*built[1]), std::move(*built[2])},
                    std::move(target));
  t.set_name(std::move(name));
  return t;
}

std::string serialize_trisection(const GroupTrisection& t) {
  std::ostringstream os;
  os << "trisection v1\n";
  if (t.name()) os << "name " << *t.name() << "\n";
  os << "genus " << t.genus() << "\n";
  os << "k " << t.rank() << "\n";
  Alphabet surface{AlphabetKind::Surface, t.genus()};
  for (int sector = 1; sector <= 3; ++sector) {
    const HandlebodyMap& m = t.map(sector);
    os << "map " << sector << "\n";
    for (int pos = 0; pos < surface.size(); ++pos) {
      os << "  " << to_string(surface.generator(pos)) << " -> "
         << to_string(m.images().images()[pos]) << "\n";
    }
    if (m.cuts() && t.genus() > 0) {
      os << "  cuts:";
      for (std::size_t i = 0; i < m.cuts()->size(); ++i)
        os << (i ? ", " : " ") << to_string((*m.cuts())[i]);
      os << "\n";
    }
  }
  if (t.target()) {
    if (!t.target()->relators().empty()) {
      os << "target:";
      for (std::size_t i = 0; i < t.target()->relators().size(); ++i)
        os << (i ? ", " : " ") << to_string(t.target()->relators()[i]);
      os << "\n";
    }
    os << "target-gens: " << t.target()->generator_count() << "\n";
  }
  return os.str();
}

}  // namespace trisect

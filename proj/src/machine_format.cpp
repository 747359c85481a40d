#include "tmbench/machine_format.hpp"

#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "tmbench/errors.hpp"

namespace tmbench {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Splits into whitespace-separated tokens, dropping comments but keeping
// escaped '#' as part of a token.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    Line line{number, {}};
    std::string cur;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const char c = raw[i];
      if (c == '\\' && i + 1 < raw.size()) {
        cur += c;
        cur += raw[++i];
      } else if (c == '#') {
        break;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        if (!cur.empty()) line.tokens.push_back(std::move(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) line.tokens.push_back(std::move(cur));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

char parse_symbol(const std::string& token, std::size_t line) {
  if (token == "\\#") return '#';
  if (token == "\\\\") return '\\';
  if (token.size() != 1 || token[0] == '\\') {
    throw ParseError(line, "symbol \"" + token + "\" is not a single character");
  }
  return token[0];
}

std::string spell_symbol(char c) {
  if (c == '#') return "\\#";
  if (c == '\\') return "\\\\";
  return std::string(1, c);
}

struct Header {
  std::optional<std::vector<std::string>> states;
  std::optional<std::string> start, accept, reject;
  std::optional<std::string> input_alphabet, tape_alphabet;
};

}  // namespace

Machine parse_machine(std::string_view text) {
  const auto lines = tokenize(text);
  Header h;
  std::vector<const Line*> trans_lines;

  auto single = [](const Line& l, std::optional<std::string>& slot, const char* key) {
    if (slot) throw ParseError(l.number, std::string("repeated \"") + key + ":\"");
    if (l.tokens.size() != 2) throw ParseError(l.number, std::string("\"") + key + ":\" takes exactly one state");
    slot = l.tokens[1];
  };
  auto alphabet = [](const Line& l, std::optional<std::string>& slot, const char* key) {
    if (slot) throw ParseError(l.number, std::string("repeated \"") + key + ":\"");
    std::string out;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      const char c = parse_symbol(l.tokens[i], l.number);
      if (out.find(c) != std::string::npos) {
        throw ParseError(l.number, std::string("duplicate symbol '") + c + "' in " + key);
      }
      out += c;
    }
    slot = std::move(out);
  };

  for (const auto& l : lines) {
    const auto& key = l.tokens[0];
    if (key == "states:") {
      if (h.states) throw ParseError(l.number, "repeated \"states:\"");
      if (l.tokens.size() < 2) throw ParseError(l.number, "\"states:\" lists no states");
      h.states = std::vector<std::string>(l.tokens.begin() + 1, l.tokens.end());
      std::set<std::string> seen;
      for (const auto& s : *h.states) {
        if (!seen.insert(s).second) throw ParseError(l.number, "duplicate state \"" + s + "\"");
      }
    } else if (key == "start:") {
      single(l, h.start, "start");
    } else if (key == "accept:") {
      single(l, h.accept, "accept");
    } else if (key == "reject:") {
      single(l, h.reject, "reject");
    } else if (key == "input_alphabet:") {
      alphabet(l, h.input_alphabet, "input_alphabet");
    } else if (key == "tape_alphabet:") {
      alphabet(l, h.tape_alphabet, "tape_alphabet");
    } else if (key == "trans:") {
      trans_lines.push_back(&l);
    } else {
      throw ParseError(l.number, "unknown directive \"" + key + "\"");
    }
  }

  if (!h.states) throw ParseError(0, "missing states");
  if (!h.start) throw ParseError(0, "missing start");
  if (!h.accept) throw ParseError(0, "missing accept");
  if (!h.reject) throw ParseError(0, "missing reject");
  if (!h.input_alphabet) throw ParseError(0, "missing input_alphabet");
  if (!h.tape_alphabet) throw ParseError(0, "missing tape_alphabet");
  if (h.tape_alphabet->find(kBlank) == std::string::npos) {
    throw ParseError(0, "tape_alphabet must include the blank '_'");
  }

  std::unordered_map<std::string, StateId> ids;
  for (std::size_t i = 0; i < h.states->size(); ++i) ids.emplace((*h.states)[i], static_cast<StateId>(i));
  auto resolve = [&](const std::string& name, std::size_t line) {
    auto it = ids.find(name);
    if (it == ids.end()) throw ParseError(line, "unknown state \"" + name + "\"");
    return it->second;
  };

  const StateId start = resolve(*h.start, 0);
  const StateId accept = resolve(*h.accept, 0);
  const StateId reject = resolve(*h.reject, 0);
  Machine m(*h.input_alphabet, *h.tape_alphabet, *h.states, start, accept, reject);

  std::set<TransitionKey> seen;
  for (const Line* l : trans_lines) {
    const auto& t = l->tokens;
    if (t.size() != 7 || t[3] != "->") {
      throw ParseError(l->number, "expected \"trans: <state> <sym> -> <state> <sym> <L|R>\"");
    }
    const StateId from = resolve(t[1], l->number);
    const char read = parse_symbol(t[2], l->number);
    const StateId to = resolve(t[4], l->number);
    const char write = parse_symbol(t[5], l->number);
    if (t[6] != "L" && t[6] != "R") throw ParseError(l->number, "move must be L or R, got \"" + t[6] + "\"");
    if (m.symbol_index(read) < 0) {
      throw ParseError(l->number, std::string("read symbol '") + read + "' is not in tape_alphabet");
    }
    if (m.symbol_index(write) < 0) {
      throw ParseError(l->number, std::string("written symbol '") + write + "' is not in tape_alphabet");
    }
    if (!seen.insert({from, read}).second) {
      throw ParseError(l->number, "duplicate transition for (" + t[1] + ", " + t[2] + ")");
    }
    m.set_transition(from, read, {to, write, t[6] == "L" ? Move::Left : Move::Right});
  }

  const auto report = validate_machine(m);
  if (!report.ok()) throw ParseError(0, "invalid machine: " + report.summary());
  return m;
}

std::string emit_machine(const Machine& m) {
  std::string out = "states:";
  for (const auto& s : m.states()) out += ' ' + s;
  out += "\nstart: " + m.state_name(m.start());
  out += "\naccept: " + m.state_name(m.accept());
  out += "\nreject: " + m.state_name(m.reject());
  out += "\ninput_alphabet:";
  for (char c : m.input_alphabet()) out += ' ' + spell_symbol(c);
  out += "\ntape_alphabet:";
  for (char c : m.tape_alphabet()) out += ' ' + spell_symbol(c);
  out += '\n';
  for (const auto& [key, a] : m.transitions()) {
    out += "trans: " + m.state_name(key.state) + ' ' + spell_symbol(key.symbol) + " -> " +
           m.state_name(a.target) + ' ' + spell_symbol(a.write) + ' ' + move_letter(a.move) + '\n';
  }
  return out;
}

}  // namespace tmbench

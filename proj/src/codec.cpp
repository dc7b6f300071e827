#include "icb/codec.hpp"

#include "icb/bounds.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <utility>

namespace icb {

Rational code_rate(const IndexCode& code) {
  return Rational(static_cast<int>(code.transmissions.size()), code.t);
}

namespace {

// Shared by both builders: turn clique classes (each message at most once per
// class, every message in exactly t classes) into slots with canonical part
// numbering. Classes arrive as sorted message lists; slots are ordered
// lexicographically by those lists, and part p of a message is its p-th
// covering slot in that order.
IndexCode assemble_code(int n, int t, std::vector<VertexSet> classes) {
  std::sort(classes.begin(), classes.end());

  IndexCode code;
  code.n = n;
  code.t = t;
  code.assignment.assign(n, {});
  code.transmissions.resize(classes.size());
  for (std::size_t s = 0; s < classes.size(); ++s) {
    for (int v : classes[s]) {
      auto& parts = code.assignment[v - 1];
      parts.push_back(static_cast<int>(s));
      code.transmissions[s].push_back({v, static_cast<int>(parts.size())});
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (static_cast<int>(code.assignment[v - 1].size()) != t)
      throw Error(ErrorKind::Internal, "message " + std::to_string(v) +
                                           " is not covered exactly t times");
  }
  return code;
}

}  // namespace

IndexCode build_clique_cover_code(const SideInfoGraph& g, const Limits& limits) {
  auto cover = clique_cover_number(g, limits);
  return assemble_code(g.n(), 1, std::move(cover.partition));
}

IndexCode build_fractional_code(const SideInfoGraph& g, int b, const Limits& limits) {
  if (b < 1) throw Error(ErrorKind::Invalid, "fold count must be positive");
  const int n = g.n();
  if (n > limits.exact_limit / b)
    throw Error(ErrorKind::Limit, "n*b = " + std::to_string(n * b) +
                                      " exceeds the exact-computation limit");

  // b-fold coloring of the core complement = ordinary coloring of its
  // b-blowup, where the b copies of a vertex are mutually adjacent.
  UndirectedGraph comp = bidirectional_core(g).complement();
  const int nb = n * b;
  std::vector<std::pair<int, int>> edges;
  auto id = [b](int v, int p) { return (v - 1) * b + p; };
  for (int v = 1; v <= n; ++v)
    for (int p = 1; p <= b; ++p)
      for (int q = p + 1; q <= b; ++q) edges.emplace_back(id(v, p), id(v, q));
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (comp.adjacent(u, v))
        for (int p = 1; p <= b; ++p)
          for (int q = 1; q <= b; ++q) edges.emplace_back(id(u, p), id(v, q));

  auto coloring = chromatic_number(UndirectedGraph(nb, edges), limits);

  // Color class -> set of messages with a copy of that color. Proper
  // coloring makes them independent in comp, i.e. bidirectional cliques.
  std::vector<VertexSet> classes(coloring.value);
  for (int v = 1; v <= n; ++v)
    for (int p = 1; p <= b; ++p)
      classes[coloring.colors[id(v, p) - 1] - 1].push_back(v);
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  return assemble_code(n, b, std::move(classes));
}

namespace {

int part_bit(std::uint32_t value, int part) { return (value >> (part - 1)) & 1; }

bool fits_width(std::uint32_t value, int t) {
  return t >= 32 || value < (std::uint32_t(1) << t);
}

}  // namespace

std::vector<std::uint8_t> encode(const IndexCode& code, const MessageVector& x) {
  if (x.t != code.t)
    throw Error(ErrorKind::Invalid, "message vector has t = " + std::to_string(x.t) +
                                        " but the code expects " +
                                        std::to_string(code.t));
  if (static_cast<int>(x.values.size()) != code.n)
    throw Error(ErrorKind::Invalid, "message vector must hold exactly n messages");
  for (std::uint32_t v : x.values)
    if (!fits_width(v, code.t))
      throw Error(ErrorKind::Invalid, "message value wider than t bits");

  std::vector<std::uint8_t> out(code.transmissions.size(), 0);
  for (std::size_t s = 0; s < code.transmissions.size(); ++s) {
    int bit = 0;
    for (const PartRef& ref : code.transmissions[s])
      bit ^= part_bit(x.values[ref.msg - 1], ref.part);
    out[s] = static_cast<std::uint8_t>(bit);
  }
  return out;
}

std::uint32_t decode(const IndexCode& code, int receiver,
                     const std::vector<std::uint8_t>& y,
                     const std::unordered_map<int, std::uint32_t>& side) {
  if (receiver < 1 || receiver > code.n)
    throw Error(ErrorKind::Invalid, "receiver index out of range");
  if (y.size() != code.transmissions.size())
    throw Error(ErrorKind::Invalid, "channel output length does not match the code");
  for (std::uint8_t bit : y)
    if (bit > 1) throw Error(ErrorKind::Invalid, "channel output must be bits");

  std::uint32_t result = 0;
  const auto& slots = code.assignment[receiver - 1];
  for (int p = 1; p <= code.t; ++p) {
    const int s = slots[p - 1];
    int bit = y[s];
    for (const PartRef& ref : code.transmissions[s]) {
      if (ref.msg == receiver) {
        if (ref.part != p)
          throw Error(ErrorKind::Invalid,
                      "slot " + std::to_string(s + 1) +
                          " mixes two parts of message " + std::to_string(receiver));
        continue;
      }
      auto it = side.find(ref.msg);
      if (it == side.end())
        throw Error(ErrorKind::Invalid,
                    "no side information for message " + std::to_string(ref.msg) +
                        " needed by slot " + std::to_string(s + 1) +
                        " (corrupted code or short side set)");
      bit ^= part_bit(it->second, ref.part);
    }
    result |= static_cast<std::uint32_t>(bit) << (p - 1);
  }
  return result;
}

namespace {

// Structural part of verification; returns false with the reason filled in.
bool check_structure(const SideInfoGraph& g, const IndexCode& code, CodeCheck& out) {
  auto fail = [&out](std::string why, int slot = 0) {
    out.pass = false;
    out.failure = std::move(why);
    out.bad_slot = slot;
    return false;
  };

  const int n = code.n;
  const int t = code.t;
  if (t < 1) return fail("t must be at least 1");
  if (code.transmissions.empty()) return fail("code has no transmissions");
  if (static_cast<int>(code.assignment.size()) != n)
    return fail("assignment does not cover every message");

  std::map<PartRef, int> owner;
  for (std::size_t s = 0; s < code.transmissions.size(); ++s) {
    const int slot_no = static_cast<int>(s) + 1;
    const auto& slot = code.transmissions[s];
    if (slot.empty()) return fail("slot " + std::to_string(slot_no) + " is empty", slot_no);
    for (const PartRef& ref : slot) {
      if (ref.msg < 1 || ref.msg > n)
        return fail("slot " + std::to_string(slot_no) + " names message " +
                        std::to_string(ref.msg) + " outside [1, n]",
                    slot_no);
      if (ref.part < 1 || ref.part > t)
        return fail("slot " + std::to_string(slot_no) + " names part " +
                        std::to_string(ref.part) + " outside [1, t]",
                    slot_no);
      if (!owner.emplace(ref, static_cast<int>(s)).second)
        return fail("part " + std::to_string(ref.part) + " of message " +
                        std::to_string(ref.msg) + " appears in two slots",
                    slot_no);
    }
    for (std::size_t a = 0; a < slot.size(); ++a)
      for (std::size_t b = a + 1; b < slot.size(); ++b) {
        int u = slot[a].msg, v = slot[b].msg;
        if (u == v) continue;
        if (!g.has_arc(u, v) || !g.has_arc(v, u))
          return fail("slot " + std::to_string(slot_no) + " pairs messages " +
                          std::to_string(u) + " and " + std::to_string(v) +
                          " that are not bidirectional neighbors",
                      slot_no);
      }
  }
  for (int j = 1; j <= n; ++j) {
    if (static_cast<int>(code.assignment[j - 1].size()) != t)
      return fail("message " + std::to_string(j) + " is not assigned exactly t slots");
    for (int p = 1; p <= t; ++p) {
      auto it = owner.find({j, p});
      if (it == owner.end())
        return fail("part " + std::to_string(p) + " of message " + std::to_string(j) +
                    " is transmitted nowhere");
      if (code.assignment[j - 1][p - 1] != it->second)
        return fail("assignment of message " + std::to_string(j) + " part " +
                    std::to_string(p) + " disagrees with the slot contents");
    }
  }
  return true;
}

}  // namespace

CodeCheck verify_code(const SideInfoGraph& g, const IndexCode& code, int trials,
                      std::uint64_t seed) {
  if (code.n != g.n())
    throw Error(ErrorKind::Invalid, "code was built for a different n");

  CodeCheck out;
  out.seed = seed;
  if (!check_structure(g, code, out)) return out;

  const int n = code.n;
  const int t = code.t;
  const std::uint32_t mask = t >= 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << t) - 1;
  const int total_bits = n * t;
  out.exhaustive = total_bits <= 20;

  std::vector<std::vector<std::uint32_t>> inputs;
  if (out.exhaustive) {
    out.cases = std::int64_t(1) << total_bits;
    inputs.reserve(static_cast<std::size_t>(out.cases));
    for (std::int64_t c = 0; c < out.cases; ++c) {
      std::vector<std::uint32_t> values(n);
      for (int v = 0; v < n; ++v)
        values[v] = static_cast<std::uint32_t>(c >> (v * t)) & mask;
      inputs.push_back(std::move(values));
    }
  } else {
    if (trials < 1) throw Error(ErrorKind::Invalid, "trials must be positive");
    out.cases = trials;
    std::mt19937_64 gen(seed);
    inputs.reserve(static_cast<std::size_t>(trials));
    for (int c = 0; c < trials; ++c) {
      std::vector<std::uint32_t> values(n);
      for (int v = 0; v < n; ++v)
        values[v] = static_cast<std::uint32_t>(gen()) & mask;
      inputs.push_back(std::move(values));
    }
  }

  std::vector<std::unordered_map<int, std::uint32_t>> side_template(n);
  std::vector<VertexSet> side_sets(n);
  for (int j = 1; j <= n; ++j) side_sets[j - 1] = g.side_info(j);

  const std::int64_t count = out.cases;
  std::int64_t first_bad = count;
  std::string first_reason;
#pragma omp parallel
  {
    std::int64_t local_bad = count;
    std::string local_reason;
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < count; ++c) {
      if (c > local_bad) continue;
      MessageVector x{t, inputs[static_cast<std::size_t>(c)]};
      std::string reason;
      try {
        auto y = encode(code, x);
        for (int j = 1; j <= n && reason.empty(); ++j) {
          std::unordered_map<int, std::uint32_t> side;
          for (int m : side_sets[j - 1]) side.emplace(m, x.values[m - 1]);
          std::uint32_t got = decode(code, j, y, side);
          if (got != x.values[j - 1])
            reason = "case " + std::to_string(c) + ": receiver " + std::to_string(j) +
                     " decoded " + std::to_string(got) + ", expected " +
                     std::to_string(x.values[j - 1]);
        }
      } catch (const Error& e) {
        reason = "case " + std::to_string(c) + ": " + e.what();
      }
      if (!reason.empty() && c < local_bad) {
        local_bad = c;
        local_reason = std::move(reason);
      }
    }
#pragma omp critical
    {
      if (local_bad < first_bad) {
        first_bad = local_bad;
        first_reason = std::move(local_reason);
      }
    }
  }

  out.pass = first_bad == count;
  if (!out.pass) out.failure = first_reason;
  return out;
}

IndexCode parse_code(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int t = -1;
  std::vector<std::vector<PartRef>> slots;

  auto fail = [](int no, const std::string& msg) -> void {
    throw Error(ErrorKind::Parse, "line " + std::to_string(no) + ": " + msg);
  };

  std::map<PartRef, int> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "t") {
      if (t >= 0) fail(line_no, "duplicate t declaration");
      if (!(ls >> t) || t <= 0) fail(line_no, "t requires a positive integer");
      if (t > 32)
        throw Error(ErrorKind::Limit, "line " + std::to_string(line_no) +
                                          ": fold count above the supported 32");
      std::string rest;
      if (ls >> rest) fail(line_no, "trailing tokens");
    } else if (tag == "s") {
      if (t < 0) fail(line_no, "slot line before the t header");
      std::vector<PartRef> slot;
      std::string item;
      while (ls >> item) {
        auto colon = item.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == item.size())
          fail(line_no, "slot entry '" + item + "' is not <msg>:<part>");
        int msg = 0, part = 0;
        try {
          std::size_t used = 0;
          msg = std::stoi(item.substr(0, colon), &used);
          if (used != colon) throw std::invalid_argument(item);
          used = 0;
          std::string part_text = item.substr(colon + 1);
          part = std::stoi(part_text, &used);
          if (used != part_text.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          fail(line_no, "slot entry '" + item + "' is not <msg>:<part>");
        }
        if (msg < 1) fail(line_no, "message index must be positive");
        if (part < 1 || part > t) fail(line_no, "part index outside [1, t]");
        PartRef ref{msg, part};
        if (!seen.emplace(ref, static_cast<int>(slots.size())).second)
          fail(line_no, "part " + std::to_string(part) + " of message " +
                            std::to_string(msg) + " repeated");
        slot.push_back(ref);
      }
      if (slot.empty()) fail(line_no, "empty slot");
      slots.push_back(std::move(slot));
    } else {
      fail(line_no, "unknown directive '" + tag + "'");
    }
  }
  if (t < 0) throw Error(ErrorKind::Parse, "missing t header");
  if (slots.empty()) throw Error(ErrorKind::Parse, "code has no transmissions");

  int n = 0;
  for (const auto& [ref, slot] : seen) n = std::max(n, ref.msg);
  IndexCode code;
  code.n = n;
  code.t = t;
  code.transmissions = std::move(slots);
  code.assignment.assign(n, std::vector<int>(t, -1));
  for (const auto& [ref, slot] : seen) code.assignment[ref.msg - 1][ref.part - 1] = slot;
  for (int j = 1; j <= n; ++j)
    for (int p = 1; p <= t; ++p)
      if (code.assignment[j - 1][p - 1] < 0)
        throw Error(ErrorKind::Parse, "message " + std::to_string(j) +
                                          " is missing part " + std::to_string(p));
  return code;
}

std::string serialize_code(const IndexCode& code) {
  std::ostringstream out;
  out << "t " << code.t << "\n";
  for (const auto& slot : code.transmissions) {
    auto sorted = slot;
    std::sort(sorted.begin(), sorted.end());
    out << "s";
    for (const PartRef& ref : sorted) out << " " << ref.msg << ":" << ref.part;
    out << "\n";
  }
  return out.str();
}

}  // namespace icb

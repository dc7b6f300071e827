// Construction, execution, and verification of clique-covering index codes:
// every transmission slot XORs message parts whose owners form a
// bidirectional clique, so each receiver can cancel everything but its own.
#pragma once

#include "icb/graph.hpp"
#include "icb/rational.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace icb {

struct PartRef {
  int msg = 0;   // message index in [1, n]
  int part = 0;  // part index in [1, t]
  friend bool operator==(const PartRef&, const PartRef&) = default;
  friend auto operator<=>(const PartRef&, const PartRef&) = default;
};

struct IndexCode {
  int n = 0;
  int t = 1;  // bits per message (the fold count)
  // transmissions[s] lists the parts XOR-combined into slot s.
  std::vector<std::vector<PartRef>> transmissions;
  // assignment[j-1][p-1] is the slot carrying part p of message j.
  std::vector<std::vector<int>> assignment;
};

// Number of transmitted bits over bits per message, r/t.
Rational code_rate(const IndexCode& code);

struct MessageVector {
  int t = 1;
  // values[j-1] holds message j; bit p-1 is part p.
  std::vector<std::uint32_t> values;
};

// One slot per clique of an optimal partition; t = 1.
IndexCode build_clique_cover_code(const SideInfoGraph& g, const Limits& limits = {});

// Splits each message into b parts routed through an optimal b-fold clique
// cover; rate chi^(b)/b. b = 1 reproduces build_clique_cover_code exactly.
IndexCode build_fractional_code(const SideInfoGraph& g, int b,
                                const Limits& limits = {});

// XOR of the assigned parts per slot; one bit per transmission.
std::vector<std::uint8_t> encode(const IndexCode& code, const MessageVector& x);

// Recovers message `receiver` from the channel bits and the receiver's side
// information (message -> value). Throws when a slot member is absent from
// the side information, which signals a corrupted code or a short side set.
std::uint32_t decode(const IndexCode& code, int receiver,
                     const std::vector<std::uint8_t>& y,
                     const std::unordered_map<int, std::uint32_t>& side);

struct CodeCheck {
  bool pass = false;
  bool exhaustive = false;   // all 2^(t*n) message vectors were tested
  std::int64_t cases = 0;    // message vectors tested
  std::uint64_t seed = 0;    // RNG seed when sampling
  std::string failure;       // first failure, empty when pass
  int bad_slot = 0;          // 1-based slot behind a structural failure, else 0
};

// Re-checks the structural invariants (parts partition, slots are cliques of
// g) and then decodability for every receiver: exhaustively when t*n <= 20,
// otherwise over `trials` seeded random message vectors.
CodeCheck verify_code(const SideInfoGraph& g, const IndexCode& code,
                      int trials = 100, std::uint64_t seed = 42);

// Text format: header "t <b>", then one line per slot "s <msg:part> ...".
// '#' starts a comment. n is inferred as the largest message index and every
// (message, part) pair must appear exactly once.
IndexCode parse_code(const std::string& text);
std::string serialize_code(const IndexCode& code);

}  // namespace icb

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "capsp/types.hpp"

namespace capsp {

// One point-to-point message. Payload words are machine words of ceil(log2 n)
// bits; a routed tuple (edge triplet, (node,dist) pair, request) counts as one
// word. Payloads are either materialized (values carried) or size-only, in
// which case only the load accounting is exercised.
struct Message {
    NodeId src = 0;
    NodeId dst = 0;
    std::vector<std::uint64_t> payload;
    std::size_t words = 0;  // == payload.size() when materialized
};

class MessageBatch {
public:
    void add(NodeId src, NodeId dst, std::vector<std::uint64_t> payload) {
        std::size_t w = payload.size();
        msgs_.push_back({src, dst, std::move(payload), w});
    }
    // payload carries raw values for `words` logical tuples (a tuple of O(1)
    // ids/weights occupies one model word)
    void add_packed(NodeId src, NodeId dst, std::vector<std::uint64_t> payload,
                    std::size_t words) {
        msgs_.push_back({src, dst, std::move(payload), words});
    }
    void add_sized(NodeId src, NodeId dst, std::size_t words) {
        msgs_.push_back({src, dst, {}, words});
    }
    const std::vector<Message>& messages() const { return msgs_; }
    std::size_t total_words() const {
        std::size_t t = 0;
        for (const auto& m : msgs_) t += m.words;
        return t;
    }

private:
    std::vector<Message> msgs_;
};

struct LedgerEntry {
    std::string label;
    std::uint64_t rounds = 0;
    std::uint64_t max_sent_words = 0;  // max over nodes, for routed entries
    std::uint64_t max_recv_words = 0;
    std::uint64_t payload_words = 0;   // for broadcast entries
    int instances = 1;                 // >1 for parallel-composed entries
};

// Charged-round account of one simulated run. Message payloads are delivered
// exactly; rounds are charged per primitive through the quoted bounds rather
// than emulated slot by slot.
class RoundLedger {
public:
    explicit RoundLedger(int n, std::uint64_t bandwidth_words = 1, double quota_c = 4.0);

    int n() const { return n_; }
    std::uint64_t bandwidth_words() const { return bandwidth_words_; }
    double quota_c() const { return quota_c_; }

    void charge(const std::string& label, std::uint64_t rounds);
    void append(LedgerEntry e);

    std::uint64_t total_rounds() const { return total_rounds_; }
    const std::vector<LedgerEntry>& entries() const { return entries_; }

    nlohmann::json to_json() const;

private:
    int n_;
    std::uint64_t bandwidth_words_;
    double quota_c_;
    std::uint64_t total_rounds_ = 0;
    std::vector<LedgerEntry> entries_;
};

// Deliver a batch in one charged round. Every node's receive load must fit
// quota_c * n * bandwidth words (the constant-round routability condition);
// otherwise QuotaExceeded aborts the run. Returns per-destination inboxes
// (1..n), each in batch insertion order (lossless, in order per (src,dst)).
std::vector<std::vector<Message>> route_validated(RoundLedger& ledger,
                                                  const MessageBatch& batch,
                                                  double quota_c,
                                                  const std::string& label);

// Make payload_words known to every node: ceil(words / (n * bandwidth)) rounds,
// min 1. Returns the charged round count.
std::uint64_t broadcast(RoundLedger& ledger, std::uint64_t payload_words,
                        const std::string& label);

// Parallel composition: charge max of the instance ledgers, checking that the
// summed per-instance bandwidth fits quota_c * parent bandwidth.
void charge_parallel(RoundLedger& parent, const std::string& label,
                     const std::vector<RoundLedger>& instances);

}  // namespace capsp

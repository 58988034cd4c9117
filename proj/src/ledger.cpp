#include "capsp/ledger.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace capsp {

RoundLedger::RoundLedger(int n, std::uint64_t bandwidth_words, double quota_c)
    : n_(n), bandwidth_words_(bandwidth_words), quota_c_(quota_c) {
    if (n < 1) throw PreconditionViolated("ledger: n must be >= 1");
    if (bandwidth_words < 1) throw PreconditionViolated("ledger: bandwidth must be >= 1 word");
}

void RoundLedger::charge(const std::string& label, std::uint64_t rounds) {
    LedgerEntry e;
    e.label = label;
    e.rounds = rounds;
    append(std::move(e));
}

void RoundLedger::append(LedgerEntry e) {
    total_rounds_ += e.rounds;
    entries_.push_back(std::move(e));
}

nlohmann::json RoundLedger::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["bandwidth_words"] = bandwidth_words_;
    j["quota_c"] = quota_c_;
    j["total_rounds"] = total_rounds_;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : entries_) {
        nlohmann::json je;
        je["label"] = e.label;
        je["rounds"] = e.rounds;
        je["max_sent_words"] = e.max_sent_words;
        je["max_recv_words"] = e.max_recv_words;
        je["payload_words"] = e.payload_words;
        je["instances"] = e.instances;
        j["entries"].push_back(je);
    }
    return j;
}

std::vector<std::vector<Message>> route_validated(RoundLedger& ledger,
                                                  const MessageBatch& batch,
                                                  double quota_c,
                                                  const std::string& label) {
    int n = ledger.n();
    std::vector<std::uint64_t> sent(n + 1, 0), recv(n + 1, 0);
    for (const Message& m : batch.messages()) {
        if (m.src < 1 || m.src > n || m.dst < 1 || m.dst > n)
            throw PreconditionViolated("route: node id out of range");
        if (m.src == m.dst) continue;  // local, costs nothing
        sent[m.src] += m.words;
        recv[m.dst] += m.words;
    }
    std::uint64_t max_sent = *std::max_element(sent.begin(), sent.end());
    std::uint64_t max_recv = *std::max_element(recv.begin(), recv.end());
    double budget = quota_c * static_cast<double>(n) *
                    static_cast<double>(ledger.bandwidth_words());
    if (static_cast<double>(max_recv) > budget)
        throw QuotaExceeded(label + ": receive load " + std::to_string(max_recv) +
                            " exceeds quota " + std::to_string(budget) + " (n=" +
                            std::to_string(n) + ")");

    std::vector<std::vector<Message>> inbox(n + 1);
    for (const Message& m : batch.messages()) inbox[m.dst].push_back(m);

    LedgerEntry e;
    e.label = label;
    e.rounds = 1;  // constant routing cost; the constant lives in quota_c
    e.max_sent_words = max_sent;
    e.max_recv_words = max_recv;
    ledger.append(std::move(e));
    return inbox;
}

std::uint64_t broadcast(RoundLedger& ledger, std::uint64_t payload_words,
                        const std::string& label) {
    std::uint64_t per_round =
        static_cast<std::uint64_t>(ledger.n()) * ledger.bandwidth_words();
    std::uint64_t rounds = (payload_words + per_round - 1) / per_round;
    if (rounds == 0) rounds = 1;
    LedgerEntry e;
    e.label = label;
    e.rounds = rounds;
    e.payload_words = payload_words;
    ledger.append(std::move(e));
    return rounds;
}

void charge_parallel(RoundLedger& parent, const std::string& label,
                     const std::vector<RoundLedger>& instances) {
    if (instances.empty()) return;
    std::uint64_t rounds = 0, band_sum = 0;
    std::uint64_t max_sent = 0, max_recv = 0;
    for (const RoundLedger& sub : instances) {
        rounds = std::max(rounds, sub.total_rounds());
        band_sum += sub.bandwidth_words();
        for (const auto& e : sub.entries()) {
            max_sent = std::max(max_sent, e.max_sent_words);
            max_recv = std::max(max_recv, e.max_recv_words);
        }
    }
    double budget = parent.quota_c() * static_cast<double>(parent.bandwidth_words());
    if (static_cast<double>(band_sum) > budget)
        throw QuotaExceeded(label + ": parallel instances need " + std::to_string(band_sum) +
                            " words of bandwidth, budget " + std::to_string(budget));
    LedgerEntry e;
    e.label = label;
    e.rounds = rounds;
    e.max_sent_words = max_sent;
    e.max_recv_words = max_recv;
    e.instances = static_cast<int>(instances.size());
    parent.append(std::move(e));
}

}  // namespace capsp

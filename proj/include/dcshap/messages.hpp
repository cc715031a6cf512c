#pragma once

#include <string>
#include <vector>

#include "dcshap/matrix.hpp"

namespace dcshap {

/// One simulated exchange between collaborators. Only the shape of the
/// payload is kept; the point is auditing what a protocol ships, not
/// re-shipping it.
struct Message {
    std::string sender;
    std::string receiver;
    std::string kind;
    Index rows = 0;
    Index cols = 0;
};

struct MessageLog {
    std::vector<Message> messages;

    void record(std::string sender, std::string receiver, std::string kind,
                Index rows, Index cols) {
        messages.push_back({std::move(sender), std::move(receiver), std::move(kind),
                            rows, cols});
    }

    /// Widest payload sent from `sender` to `receiver`, or 0 if none.
    Index max_cols_between(const std::string& sender, const std::string& receiver) const {
        Index widest = 0;
        for (const auto& m : messages)
            if (m.sender == sender && m.receiver == receiver)
                widest = std::max(widest, m.cols);
        return widest;
    }
};

}  // namespace dcshap

#include "gals/partition.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace gals {

Partition::Partition(const Network& net, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != net.node_count())
        throw std::invalid_argument("label vector does not cover the network");
    labels_.resize(labels.size());
    pos_.resize(labels.size());
    std::unordered_map<int, int> compact;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        auto it = compact.find(labels[i]);
        if (it == compact.end()) {
            it = compact.emplace(labels[i], static_cast<int>(members_.size())).first;
            members_.emplace_back();
            degree_sum_.push_back(0);
        }
        int c = it->second;
        labels_[i] = c;
        pos_[i] = static_cast<int>(members_[c].size());
        members_[c].push_back(i);
        degree_sum_[c] += net.degree(i);
    }
}

void Partition::move_node(const Network& net, int i, int new_label) {
    if (i < 0 || i >= size()) throw std::invalid_argument("node out of range");
    int k = community_count();
    if (new_label != kSingleton && (new_label < 0 || new_label >= k))
        throw std::invalid_argument("label out of range");

    int old_label = labels_[i];
    if (new_label == old_label) return;
    if (new_label == kSingleton && members_[old_label].size() == 1) return;

    // Detach i from its community, swap-filling the membership hole.
    std::vector<int>& olds = members_[old_label];
    int hole = pos_[i];
    olds[hole] = olds.back();
    pos_[olds[hole]] = hole;
    olds.pop_back();
    degree_sum_[old_label] -= net.degree(i);

    int dest = new_label;
    if (dest == kSingleton) {
        dest = static_cast<int>(members_.size());
        members_.emplace_back();
        degree_sum_.push_back(0);
    }
    labels_[i] = dest;
    pos_[i] = static_cast<int>(members_[dest].size());
    members_[dest].push_back(i);
    degree_sum_[dest] += net.degree(i);

    // Keep labels compact: relabel the last community into an emptied slot.
    if (olds.empty()) {
        int last = community_count() - 1;
        if (old_label != last) {
            members_[old_label] = std::move(members_[last]);
            degree_sum_[old_label] = degree_sum_[last];
            for (int v : members_[old_label]) labels_[v] = old_label;
        }
        members_.pop_back();
        degree_sum_.pop_back();
    }
}

Partition apply_move(const Network& net, Partition part, int i, int new_label) {
    part.move_node(net, i, new_label);
    return part;
}

Partition parse_ground_truth(std::istream& in, const Network& net) {
    std::vector<int> labels(net.node_count(), -1);
    std::unordered_map<std::string, int> communities;
    std::string raw;
    int line_no = 0;
    int assigned = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string node, community, extra;
        if (!(line >> node)) continue;
        if (!(line >> community) || (line >> extra))
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'node community'");
        int id = net.id_of(node);
        if (id < 0)
            throw ParseError("line " + std::to_string(line_no) +
                             ": unknown node '" + node + "'");
        if (labels[id] != -1)
            throw ParseError("line " + std::to_string(line_no) +
                             ": duplicate assignment for '" + node + "'");
        auto it = communities.find(community);
        if (it == communities.end())
            it = communities.emplace(community, static_cast<int>(communities.size()))
                     .first;
        labels[id] = it->second;
        ++assigned;
    }
    if (assigned != net.node_count()) {
        for (int i = 0; i < net.node_count(); ++i)
            if (labels[i] == -1)
                throw ParseError("node '" + net.name(i) + "' has no community");
    }
    return Partition(net, labels);
}

void write_partition(std::ostream& out, const Network& net, const Partition& part) {
    for (int i = 0; i < net.node_count(); ++i)
        out << net.name(i) << ' ' << part.label(i) << '\n';
}

std::string partition_json(const Network& net, const Partition& part, double q) {
    nlohmann::json doc;
    doc["q"] = q;
    nlohmann::json comms = nlohmann::json::array();
    for (int c = 0; c < part.community_count(); ++c) {
        nlohmann::json members = nlohmann::json::array();
        for (int i : part.members(c)) members.push_back(net.name(i));
        comms.push_back(std::move(members));
    }
    doc["communities"] = std::move(comms);
    return doc.dump(2);
}

} // namespace gals

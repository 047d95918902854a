#include "tlsn/sim/channel.hpp"

#include "tlsn/errors.hpp"

namespace tlsn::sim {

Bytes PartyMessage::canonical() const {
    std::vector<Bytes> f;
    Bytes id;
    append_u64le(id, session_id);
    f.push_back(id);
    f.push_back({static_cast<uint8_t>(sender)});
    f.push_back(str_bytes(phase));
    f.push_back(str_bytes(type));
    Bytes sq;
    append_u64le(sq, seq);
    f.push_back(sq);
    f.push_back(payload);
    return pack_fields(f);
}

namespace detail {

struct Slot {
    PartyMessage msg;
    bool dropped = false;  // delivery marker for adversary drops
};

struct ChannelCore {
    std::mutex mtx;
    std::condition_variable cv;
    // direction d: messages flowing from side d to side 1-d
    std::deque<Slot> queue[2];
    std::optional<Slot> reorder_hold[2];
    bool closed[2] = {false, false};
};

}  // namespace detail

Endpoint::Endpoint(std::shared_ptr<detail::ChannelCore> core, int side, Party self, Party peer,
                   SessionContext* ctx)
    : core_(std::move(core)), side_(side), self_(self), peer_(peer), ctx_(ctx) {}

Endpoint::~Endpoint() {
    if (core_) close();
}

void Endpoint::close() {
    std::lock_guard lock(core_->mtx);
    // flush a held reorder message so the peer does not lose it
    if (core_->reorder_hold[side_]) {
        core_->queue[side_].push_back(std::move(*core_->reorder_hold[side_]));
        core_->reorder_hold[side_].reset();
    }
    core_->closed[side_] = true;
    core_->cv.notify_all();
}

void Endpoint::send(std::string_view phase, std::string_view type, std::vector<Bytes> fields) {
    PartyMessage m;
    m.session_id = ctx_->session_id;
    m.sender = self_;
    m.phase = std::string(phase);
    m.type = std::string(type);
    m.payload = pack_fields(fields);
    m.seq = ctx_->seq[static_cast<size_t>(self_)].fetch_add(1);

    if (ctx_->record_transcript)
        ctx_->logs[static_cast<size_t>(self_)].events.push_back({true, m});

    detail::Slot slot{std::move(m), false};
    bool reorder = false;

    if (auto adv = ctx_->adversary) {
        std::lock_guard alock(adv->mtx);
        if (adv->used.size() != adv->rules.size()) adv->used.assign(adv->rules.size(), false);
        int count = adv->match_counts[{peer_, slot.msg.type}]++;
        for (size_t i = 0; i < adv->rules.size(); ++i) {
            auto& r = adv->rules[i];
            if (adv->used[i] || r.receiver != peer_ || r.type != slot.msg.type || r.occurrence != count)
                continue;
            adv->used[i] = true;
            switch (r.action) {
                case AdversaryRule::Action::FlipBit: {
                    auto f = slot.msg.fields();
                    if (r.field_index < f.size() && r.byte_offset < f[r.field_index].size()) {
                        f[r.field_index][r.byte_offset] ^= r.xor_mask;
                        slot.msg.payload = pack_fields(f);
                        adv->applied.push_back("flip " + slot.msg.type);
                    }
                    break;
                }
                case AdversaryRule::Action::ReplaceField: {
                    auto f = slot.msg.fields();
                    if (r.field_index < f.size()) {
                        f[r.field_index] = r.replacement;
                        slot.msg.payload = pack_fields(f);
                        adv->applied.push_back("replace " + slot.msg.type);
                    }
                    break;
                }
                case AdversaryRule::Action::Drop:
                    slot.dropped = true;
                    adv->applied.push_back("drop " + slot.msg.type);
                    break;
                case AdversaryRule::Action::Reorder:
                    reorder = true;
                    adv->applied.push_back("reorder " + slot.msg.type);
                    break;
            }
            break;
        }
    }

    std::lock_guard lock(core_->mtx);
    if (reorder && !core_->reorder_hold[side_]) {
        core_->reorder_hold[side_] = std::move(slot);
        return;
    }
    core_->queue[side_].push_back(std::move(slot));
    if (core_->reorder_hold[side_]) {
        core_->queue[side_].push_back(std::move(*core_->reorder_hold[side_]));
        core_->reorder_hold[side_].reset();
    }
    core_->cv.notify_all();
}

PartyMessage Endpoint::recv_any() {
    int dir = 1 - side_;
    std::unique_lock lock(core_->mtx);
    core_->cv.wait(lock, [&] { return !core_->queue[dir].empty() || core_->closed[dir]; });
    if (core_->queue[dir].empty())
        throw ProtocolError(errc::ChannelError, "channel closed by " + std::string(party_name(peer_)));
    detail::Slot slot = std::move(core_->queue[dir].front());
    core_->queue[dir].pop_front();
    lock.unlock();

    if (slot.dropped)
        throw ProtocolError(errc::ChannelError, "message dropped in transit: " + slot.msg.type);
    if (ctx_->record_transcript)
        ctx_->logs[static_cast<size_t>(self_)].events.push_back({false, slot.msg});
    return slot.msg;
}

PartyMessage Endpoint::recv(std::string_view expect_type) {
    PartyMessage m = recv_any();
    if (m.type != expect_type)
        throw ProtocolError(errc::ChannelError,
                            "expected message " + std::string(expect_type) + ", got " + m.type);
    return m;
}

Channel::Channel(SessionContext& ctx, Party a, Party b) {
    auto core = std::make_shared<detail::ChannelCore>();
    a_.reset(new Endpoint(core, 0, a, b, &ctx));
    b_.reset(new Endpoint(core, 1, b, a, &ctx));
}

}  // namespace tlsn::sim

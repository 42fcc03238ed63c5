#pragma once

#include "common2/queue_core.hpp"

namespace common2 {

// How the enqueuer-shared consensus cells (agenda slots and the per-location
// read agreement) are realized: as primitive consensus objects, or derived
// from Fetch&Add and registers via the standard two-process construction.
enum class ConsensusMode : std::uint8_t { derived, primitive };

const char* consensus_mode_name(ConsensusMode m);

// Agenda append tokens name an append instance, not its value: the item is
// published in announce register agendaItem[id, seq] before (id, seq) is
// proposed for a slot. Tokens are positive, so they never collide with the
// unset marker.
inline Word agenda_token(int enqueuer_id, std::int64_t seq) {
  return (seq << 1) | enqueuer_id;
}
inline int agenda_token_pid(Word token) { return static_cast<int>(token & 1); }
inline std::int64_t agenda_token_seq(Word token) { return token >> 1; }

struct TemdLayout {
  // Dequeuer-visible arrays, as in the single-enqueuer algorithm, except
  // that row is a pair of registers, one per enqueuer; dequeuers use the max.
  ArrayTag deq_active, item, item_index, item_taken, tail;
  ArrayTag row_pair;  // row[0..1]
  // Shared between the two enqueuers only.
  ArrayTag agenda_item;  // announce registers [enqueuer, seq]
  ConsensusMode mode = ConsensusMode::derived;
  // mode == primitive
  ArrayTag agenda_slot = -1;      // consensus per slot
  ArrayTag dar = -1;              // deqActiveRead consensus per location
  // mode == derived
  ArrayTag slot_prop0 = -1, slot_prop1 = -1, slot_win = -1;
  ArrayTag dar_prop0 = -1, dar_prop1 = -1, dar_win = -1;

  SemdLayout deq_view() const {
    return {deq_active, item, item_index, item_taken, row_pair, tail};
  }
};

// Two-enqueuer enqueue: append to the agenda, then replay the virtual
// enqueuer up to and including the appended index. Every step shared with
// the dequeuers is idempotent; the per-location deqActive read is pinned by
// consensus so both enqueuers follow one trajectory.
struct TemdEnq {
  TemdLayout lay;
  Word x = kBottom;
  int id = 0;  // bound at construction; 0 or 1
  std::int64_t seq = 0;
  Word token = 0;
  std::int64_t slot = 0;     // slot currently being decided
  std::int64_t k = 0;        // agenda index of this operation's item
  std::int64_t c = 0;        // virtual item being replayed
  Word value = kBottom;      // consensus proposal / decided scratch
  std::int32_t dr = 0, dh = 0;  // location of the in-flight read agreement
  int pc = 0;
  int replay_iters = 0;
  SharedCall next;
  Word result = kBottom;

  static TemdEnq start(const TemdLayout& lay, ProcLocals& locals, Word x, int id);
  bool resume(MachineCtx& ctx, Word ret);

 private:
  void begin_slot_attempt(MachineCtx& ctx);
  bool slot_decided(MachineCtx& ctx, Word decided);
  bool begin_replay_iteration(MachineCtx& ctx);
  void begin_read_agreement(MachineCtx& ctx);
  bool read_agreed(MachineCtx& ctx, Word decided);
};

struct TemdDeq {
  TemdLayout lay;
  DeqLoop loop;
  std::int64_t r0 = 0;
  int pc = 0;  // 0: read row[0], 1: read row[1], 2: inside the loop
  SharedCall next;
  Word result = kBottom;

  static TemdDeq start(const TemdLayout& lay, ProcLocals& locals);
  bool resume(MachineCtx& ctx, Word ret);
};

// Standalone agenda append over the same cells, for exercising the agenda
// construction in isolation: announce the item, then propose the token for
// successive slots until one is won. result is the won slot index.
struct AgendaAppend {
  TemdLayout lay;
  Word x = kBottom;
  int id = 0;
  std::int64_t seq = 0;
  Word token = 0;
  std::int64_t slot = 0;
  Word value = kBottom;
  int pc = 0;
  SharedCall next;
  Word result = kBottom;

  static AgendaAppend start(const TemdLayout& lay, ProcLocals& locals, Word x, int id);
  bool resume(MachineCtx& ctx, Word ret);
};

// Sequential agenda for reference and unit tests.
class AgendaSeq {
 public:
  std::int64_t append(Word x) {
    items_.push_back(x);
    return static_cast<std::int64_t>(items_.size());
  }
  Word get(std::int64_t k) const { return items_.at(static_cast<size_t>(k - 1)); }
  std::int64_t tail() const { return static_cast<std::int64_t>(items_.size()); }

 private:
  std::vector<Word> items_;
};

}  // namespace common2

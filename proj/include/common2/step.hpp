#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "common2/history.hpp"
#include "common2/objects.hpp"
#include "common2/word.hpp"

namespace common2 {

// The one shared-object method call a machine wants to perform next.
// Local computation between shared calls is folded into the following call.
struct SharedCall {
  CellId cell;
  Method method = Method::read;
  Word arg = kBottom;
};

// Process-private persistent state. Survives across the operations of one
// logical process; which fields are live depends on role and algorithm.
struct ProcLocals {
  std::int64_t head = 0;       // enqueuer: next column in the current row
  std::int64_t tail = 0;       // sesd dequeuer: next index to read
  std::int64_t enq_count = 0;  // enqueuer: items written so far
  std::int64_t row = 0;        // enqueuer: current row (it is the sole writer)
  std::int64_t appends = 0;    // temd enqueuer: own agenda appends
  std::int64_t cursor = 0;     // temd enqueuer: last agenda slot decided on
};

struct MachineCtx {
  ProcLocals& locals;
  // temd enqueuer: winner token per agenda slot, append-only (undo truncates).
  std::vector<Word>& winners;
};

// Machine programmable from tests and from the base-object operation suite:
// a step function consumes the previous call's return value, advances the
// program counter and fills `next` or marks `done`.
struct GenericMachine {
  using StepFn = void (*)(GenericMachine&, MachineCtx&, Word ret);

  StepFn fn = nullptr;
  std::array<Word, 8> r{};
  std::array<CellId, 6> cells{};
  int pc = 0;
  OpKind op = OpKind::raw;
  Word op_arg = kBottom;
  SharedCall next;
  bool done = false;
  Word result = kBottom;
};

// Wait-free two-process consensus from Fetch&Add and registers: write own
// proposal, fetch&add on the winner counter, the first arrival returns its
// own proposal and the other returns the winner's.
GenericMachine make_consensus_via_fa(CellId own_proposal, CellId other_proposal,
                                     CellId winner, Word proposal);

// One-shot machine performing a single call and returning its value.
GenericMachine make_raw_call(CellId cell, Method m, Word arg);

}  // namespace common2

#pragma once

#include "common2/step.hpp"

namespace common2 {

// ---------------------------------------------------------------------------
// Single-enqueuer single-dequeuer queue. head is enqueuer-local and tail is
// dequeuer-local, so enq and deq each cost exactly one shared step.
// ---------------------------------------------------------------------------

struct SesdLayout {
  ArrayTag item;  // registers indexed from 0, initially unset
};

struct SesdEnq {
  SesdLayout lay;
  SharedCall next;
  Word result = kBottom;

  static SesdEnq start(const SesdLayout& lay, ProcLocals& locals, Word x);
  bool resume(MachineCtx& ctx, Word ret);
};

struct SesdDeq {
  SesdLayout lay;
  SharedCall next;
  Word result = kBottom;

  static SesdDeq start(const SesdLayout& lay, ProcLocals& locals);
  bool resume(MachineCtx& ctx, Word ret);
};

// ---------------------------------------------------------------------------
// Single-enqueuer multiple-dequeuer queue. Dequeuers divide each row of
// itemIndex with a per-row Fetch&Add; a dequeuer announces itself in
// deqActive before reading, and the enqueuer moves to the next row when it
// finds it has been overtaken. Item indexes flow through itemIndex and are
// claimed exclusively through itemTaken.
// ---------------------------------------------------------------------------

struct SemdLayout {
  ArrayTag deq_active;  // 2-d booleans, initially false
  ArrayTag item;        // registers indexed from 1
  ArrayTag item_index;  // 2-d integers, initially 0
  ArrayTag item_taken;  // Fetch&Add indexed from 1, initially 0
  ArrayTag row;         // integer register, initially 0
  ArrayTag tail;        // Fetch&Add per row, accessed only by dequeuers
};

// Arrays touched by the dequeue loop; identical in the single- and
// two-enqueuer algorithms.
struct DeqArrays {
  ArrayTag tail, deq_active, item_index, item_taken, item;
};

// The dequeue loop after the row has been fixed: reserve a column, announce,
// read the index, then either return empty, claim the item, or retry in the
// same row. A full pass that neither returns nor claims is counted in
// full_bodies; the algorithm guarantees at most two such passes.
struct DeqLoop {
  DeqArrays arrays;
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t k = 0;
  int pc = 0;
  int full_bodies = 0;

  SharedCall entry_call() const {
    return {{arrays.tail, static_cast<std::int32_t>(i), 0}, Method::faa, 1};
  }
  // Consumes the previous return value; either fills `call` or sets `result`.
  bool resume(Word ret, SharedCall& call, Word& result);
};

struct SemdEnq {
  SemdLayout lay;
  Word x = kBottom;
  std::int64_t count = 0;  // this operation's item index
  int pc = 0;
  SharedCall next;
  Word result = kBottom;

  static SemdEnq start(const SemdLayout& lay, ProcLocals& locals, Word x);
  bool resume(MachineCtx& ctx, Word ret);
};

struct SemdDeq {
  SemdLayout lay;
  DeqLoop loop;
  int pc = 0;  // 0: read row, 1: inside the loop
  SharedCall next;
  Word result = kBottom;

  static SemdDeq start(const SemdLayout& lay, ProcLocals& locals);
  bool resume(MachineCtx& ctx, Word ret);
};

}  // namespace common2

#pragma once

#include <variant>

#include "common2/two_enqueuer.hpp"

namespace common2 {

enum class Algorithm : std::uint8_t { sesd, semd, temd };
const char* algorithm_name(Algorithm a);

using Machine =
    std::variant<SesdEnq, SesdDeq, SemdEnq, SemdDeq, TemdEnq, TemdDeq,
                 AgendaAppend, GenericMachine>;

SharedCall machine_pending(const Machine& m);
// Feeds the previous call's return value; true when the operation completed.
bool machine_resume(Machine& m, MachineCtx& ctx, Word ret);
Word machine_result(const Machine& m);
// Non-returning full dequeue-loop passes (0 for enqueues).
int machine_full_bodies(const Machine& m);
// Virtual-enqueuer items replayed (0 outside temd enq).
int machine_replay_iters(const Machine& m);

// Array registry plus per-algorithm handles for one queue instance.
struct QueueLayout {
  Algorithm algo = Algorithm::sesd;
  ConsensusMode mode = ConsensusMode::derived;
  SesdLayout sesd{};
  SemdLayout semd{};
  TemdLayout temd{};
  std::vector<ArrayInfo> arrays;
};

QueueLayout make_queue_layout(Algorithm algo,
                              ConsensusMode mode = ConsensusMode::derived);

Machine make_enq_machine(const QueueLayout& lay, ProcLocals& locals, Word x,
                         int enqueuer_id);
Machine make_deq_machine(const QueueLayout& lay, ProcLocals& locals);

}  // namespace common2

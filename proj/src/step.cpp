#include "common2/step.hpp"

namespace common2 {

static void raw_call_fn(GenericMachine& m, MachineCtx&, Word ret) {
  m.result = ret;
  m.done = true;
}

GenericMachine make_raw_call(CellId cell, Method method, Word arg) {
  GenericMachine m;
  m.fn = raw_call_fn;
  m.next = {cell, method, arg};
  return m;
}

static void consensus_via_fa_fn(GenericMachine& m, MachineCtx&, Word ret) {
  switch (m.pc) {
    case 0:  // proposal written
      m.next = {m.cells[2], Method::faa, 1};
      m.pc = 1;
      break;
    case 1:  // winner counter
      if (ret == 0) {
        m.result = m.r[0];
        m.done = true;
      } else {
        m.next = {m.cells[1], Method::read, kBottom};
        m.pc = 2;
      }
      break;
    default:  // other process's proposal
      m.result = ret;
      m.done = true;
  }
}

GenericMachine make_consensus_via_fa(CellId own_proposal, CellId other_proposal,
                                     CellId winner, Word proposal) {
  GenericMachine m;
  m.fn = consensus_via_fa_fn;
  m.cells = {own_proposal, other_proposal, winner};
  m.r[0] = proposal;
  m.next = {own_proposal, Method::write, proposal};
  return m;
}

}  // namespace common2

#include "common2/two_enqueuer.hpp"

#include <algorithm>

namespace common2 {

namespace {

std::int32_t idx(std::int64_t v) { return static_cast<std::int32_t>(v); }

enum Pc {
  kAnnounce = 0,
  kSlotDecide,
  kSlotPropWrite,
  kSlotWinFaa,
  kSlotPropRead,
  kGet,
  kWriteItem,
  kWriteIndex,
  kReadActive,
  kDarDecide,
  kDarPropWrite,
  kDarWinFaa,
  kDarPropRead,
  kWriteIndex2,
  kWriteRow,
};

}  // namespace

const char* consensus_mode_name(ConsensusMode m) {
  return m == ConsensusMode::derived ? "derived" : "primitive";
}

TemdEnq TemdEnq::start(const TemdLayout& lay, ProcLocals& locals, Word x, int id) {
  TemdEnq m;
  m.lay = lay;
  m.x = x;
  m.id = id;
  locals.appends += 1;
  m.seq = locals.appends;
  m.token = agenda_token(id, m.seq);
  m.next = {{lay.agenda_item, id, idx(m.seq)}, Method::write, x};
  m.pc = kAnnounce;
  return m;
}

void TemdEnq::begin_slot_attempt(MachineCtx& ctx) {
  ctx.locals.cursor += 1;
  slot = ctx.locals.cursor;
  if (lay.mode == ConsensusMode::primitive) {
    next = {{lay.agenda_slot, idx(slot), 0}, Method::decide, token};
    pc = kSlotDecide;
  } else {
    ArrayTag prop = (id == 0) ? lay.slot_prop0 : lay.slot_prop1;
    next = {{prop, idx(slot), 0}, Method::write, token};
    pc = kSlotPropWrite;
  }
}

bool TemdEnq::slot_decided(MachineCtx& ctx, Word decided) {
  ctx.winners.push_back(decided);
  if (decided == token) {
    k = slot;
    return begin_replay_iteration(ctx);
  }
  begin_slot_attempt(ctx);
  return false;
}

bool TemdEnq::begin_replay_iteration(MachineCtx& ctx) {
  if (ctx.locals.enq_count >= k) {
    result = kOk;
    return true;
  }
  ctx.locals.enq_count += 1;
  c = ctx.locals.enq_count;
  replay_iters += 1;
  Word w = ctx.winners[static_cast<size_t>(c - 1)];
  next = {{lay.agenda_item, agenda_token_pid(w), idx(agenda_token_seq(w))},
          Method::read, kBottom};
  pc = kGet;
  return false;
}

void TemdEnq::begin_read_agreement(MachineCtx& ctx) {
  dr = idx(ctx.locals.row);
  dh = idx(ctx.locals.head);
  if (lay.mode == ConsensusMode::primitive) {
    next = {{lay.dar, dr, dh}, Method::decide, value};
    pc = kDarDecide;
  } else {
    ArrayTag prop = (id == 0) ? lay.dar_prop0 : lay.dar_prop1;
    next = {{prop, dr, dh}, Method::write, value};
    pc = kDarPropWrite;
  }
}

bool TemdEnq::read_agreed(MachineCtx& ctx, Word decided) {
  if (decided != 0) {
    next = {{lay.item_index, idx(ctx.locals.row + 1), 0}, Method::write, c};
    pc = kWriteIndex2;
    return false;
  }
  ctx.locals.head += 1;
  return begin_replay_iteration(ctx);
}

bool TemdEnq::resume(MachineCtx& ctx, Word ret) {
  ProcLocals& L = ctx.locals;
  switch (pc) {
    case kAnnounce:
      begin_slot_attempt(ctx);
      return false;
    case kSlotDecide:
      return slot_decided(ctx, ret);
    case kSlotPropWrite:
      next = {{lay.slot_win, idx(slot), 0}, Method::faa, 1};
      pc = kSlotWinFaa;
      return false;
    case kSlotWinFaa:
      if (ret == 0) return slot_decided(ctx, token);
      next = {{(id == 0) ? lay.slot_prop1 : lay.slot_prop0, idx(slot), 0},
              Method::read, kBottom};
      pc = kSlotPropRead;
      return false;
    case kSlotPropRead:
      return slot_decided(ctx, ret);
    case kGet:
      value = ret;
      next = {{lay.item, idx(c), 0}, Method::write, value};
      pc = kWriteItem;
      return false;
    case kWriteItem:
      next = {{lay.item_index, idx(L.row), idx(L.head)}, Method::write, c};
      pc = kWriteIndex;
      return false;
    case kWriteIndex:
      next = {{lay.deq_active, idx(L.row), idx(L.head)}, Method::read, kBottom};
      pc = kReadActive;
      return false;
    case kReadActive:
      value = ret;  // the shared read; both enqueuers agree on it below
      begin_read_agreement(ctx);
      return false;
    case kDarDecide:
      return read_agreed(ctx, ret);
    case kDarPropWrite:
      next = {{lay.dar_win, dr, dh}, Method::faa, 1};
      pc = kDarWinFaa;
      return false;
    case kDarWinFaa:
      if (ret == 0) return read_agreed(ctx, value);
      next = {{(id == 0) ? lay.dar_prop1 : lay.dar_prop0, dr, dh}, Method::read, kBottom};
      pc = kDarPropRead;
      return false;
    case kDarPropRead:
      return read_agreed(ctx, ret);
    case kWriteIndex2:
      next = {{lay.row_pair, id, 0}, Method::write, L.row + 1};
      pc = kWriteRow;
      return false;
    default:  // kWriteRow
      L.head = 1;
      L.row += 1;
      return begin_replay_iteration(ctx);
  }
}

TemdDeq TemdDeq::start(const TemdLayout& lay, ProcLocals&) {
  TemdDeq m;
  m.lay = lay;
  m.loop.arrays = {lay.tail, lay.deq_active, lay.item_index, lay.item_taken, lay.item};
  m.next = {{lay.row_pair, 0, 0}, Method::read, kBottom};
  return m;
}

bool TemdDeq::resume(MachineCtx&, Word ret) {
  switch (pc) {
    case 0:  // row[0], then row[1], in that fixed order
      r0 = ret;
      next = {{lay.row_pair, 1, 0}, Method::read, kBottom};
      pc = 1;
      return false;
    case 1:
      loop.i = std::max(r0, ret);
      next = loop.entry_call();
      pc = 2;
      return false;
    default:
      return loop.resume(ret, next, result);
  }
}

AgendaAppend AgendaAppend::start(const TemdLayout& lay, ProcLocals& locals, Word x, int id) {
  AgendaAppend m;
  m.lay = lay;
  m.x = x;
  m.id = id;
  locals.appends += 1;
  m.seq = locals.appends;
  m.token = agenda_token(id, m.seq);
  m.next = {{lay.agenda_item, id, idx(m.seq)}, Method::write, x};
  m.pc = kAnnounce;
  return m;
}

bool AgendaAppend::resume(MachineCtx& ctx, Word ret) {
  auto attempt = [&] {
    ctx.locals.cursor += 1;
    slot = ctx.locals.cursor;
    if (lay.mode == ConsensusMode::primitive) {
      next = {{lay.agenda_slot, idx(slot), 0}, Method::decide, token};
      pc = kSlotDecide;
    } else {
      next = {{(id == 0) ? lay.slot_prop0 : lay.slot_prop1, idx(slot), 0},
              Method::write, token};
      pc = kSlotPropWrite;
    }
  };
  auto decided = [&](Word w) {
    ctx.winners.push_back(w);
    if (w == token) {
      result = slot;
      return true;
    }
    attempt();
    return false;
  };
  switch (pc) {
    case kAnnounce:
      attempt();
      return false;
    case kSlotDecide:
      return decided(ret);
    case kSlotPropWrite:
      next = {{lay.slot_win, idx(slot), 0}, Method::faa, 1};
      pc = kSlotWinFaa;
      return false;
    case kSlotWinFaa:
      if (ret == 0) return decided(token);
      next = {{(id == 0) ? lay.slot_prop1 : lay.slot_prop0, idx(slot), 0},
              Method::read, kBottom};
      pc = kSlotPropRead;
      return false;
    default:  // kSlotPropRead
      return decided(ret);
  }
}

}  // namespace common2

#include "common2/queue_core.hpp"

namespace common2 {

namespace {
std::int32_t idx(std::int64_t v) { return static_cast<std::int32_t>(v); }
}  // namespace

SesdEnq SesdEnq::start(const SesdLayout& lay, ProcLocals& locals, Word x) {
  SesdEnq m;
  m.lay = lay;
  m.next = {{lay.item, idx(locals.head), 0}, Method::write, x};
  return m;
}

bool SesdEnq::resume(MachineCtx& ctx, Word) {
  ctx.locals.head += 1;
  result = kOk;
  return true;
}

SesdDeq SesdDeq::start(const SesdLayout& lay, ProcLocals& locals) {
  SesdDeq m;
  m.lay = lay;
  m.next = {{lay.item, idx(locals.tail), 0}, Method::read, kBottom};
  return m;
}

bool SesdDeq::resume(MachineCtx& ctx, Word ret) {
  if (!is_bottom(ret)) ctx.locals.tail += 1;
  result = ret;
  return true;
}

bool DeqLoop::resume(Word ret, SharedCall& call, Word& result) {
  switch (pc) {
    case 0:  // tail[i].f&a(1)
      j = ret;
      call = {{arrays.deq_active, idx(i), idx(j)}, Method::write, 1};
      pc = 1;
      return false;
    case 1:  // deqActive[i,j] := true
      call = {{arrays.item_index, idx(i), idx(j)}, Method::read, kBottom};
      pc = 2;
      return false;
    case 2:  // k := itemIndex[i,j]
      k = ret;
      if (k == 0) {
        result = kBottom;
        return true;
      }
      call = {{arrays.item_taken, idx(k), 0}, Method::faa, 1};
      pc = 3;
      return false;
    case 3:  // itemTaken[k].f&a(1)
      if (ret == 0) {
        call = {{arrays.item, idx(k), 0}, Method::read, kBottom};
        pc = 4;
        return false;
      }
      full_bodies += 1;  // lost the claim; retry in the same row
      call = entry_call();
      pc = 0;
      return false;
    default:  // item[k]
      result = ret;
      return true;
  }
}

SemdEnq SemdEnq::start(const SemdLayout& lay, ProcLocals& locals, Word x) {
  SemdEnq m;
  m.lay = lay;
  m.x = x;
  locals.enq_count += 1;  // enqueuer-local, folded into the first shared step
  m.count = locals.enq_count;
  m.next = {{lay.item, idx(m.count), 0}, Method::write, x};
  return m;
}

bool SemdEnq::resume(MachineCtx& ctx, Word ret) {
  ProcLocals& L = ctx.locals;
  switch (pc) {
    case 0:  // item[count] written
      next = {{lay.item_index, idx(L.row), idx(L.head)}, Method::write, count};
      pc = 1;
      return false;
    case 1:  // itemIndex[row, head] := count
      next = {{lay.deq_active, idx(L.row), idx(L.head)}, Method::read, kBottom};
      pc = 2;
      return false;
    case 2:  // deqActive[row, head] read
      if (ret != 0) {  // overtaken: expose the index at the top of the next row
        next = {{lay.item_index, idx(L.row + 1), 0}, Method::write, count};
        pc = 3;
        return false;
      }
      L.head += 1;
      result = kOk;
      return true;
    case 3:  // itemIndex[row+1, 0] := count, before row is published
      next = {{lay.row, 0, 0}, Method::write, L.row + 1};
      pc = 4;
      return false;
    default:  // row := row + 1
      L.head = 1;
      L.row += 1;
      result = kOk;
      return true;
  }
}

SemdDeq SemdDeq::start(const SemdLayout& lay, ProcLocals&) {
  SemdDeq m;
  m.lay = lay;
  m.loop.arrays = {lay.tail, lay.deq_active, lay.item_index, lay.item_taken, lay.item};
  m.next = {{lay.row, 0, 0}, Method::read, kBottom};
  return m;
}

bool SemdDeq::resume(MachineCtx&, Word ret) {
  if (pc == 0) {  // i := row, read exactly once per operation
    loop.i = ret;
    next = loop.entry_call();
    pc = 1;
    return false;
  }
  return loop.resume(ret, next, result);
}

}  // namespace common2

#include "common2/objects.hpp"

#include <stdexcept>

namespace common2 {

std::string word_str(Word w) {
  return is_bottom(w) ? "_|_" : std::to_string(w);
}

const char* method_name(Method m) {
  switch (m) {
    case Method::read: return "read";
    case Method::write: return "write";
    case Method::faa: return "faa";
    case Method::swap: return "swap";
    case Method::decide: return "decide";
  }
  return "?";
}

Word apply_step(CellKind kind, Method m, Word& state, Word arg) {
  switch (m) {
    case Method::read:
      assert(kind == CellKind::reg);
      return state;
    case Method::write:
      assert(kind == CellKind::reg);
      state = arg;
      return kOk;
    case Method::faa: {
      assert(kind == CellKind::fetch_add);
      Word pre = state;
      state = pre + arg;
      return pre;
    }
    case Method::swap: {
      assert(kind == CellKind::swap);
      Word pre = state;
      state = arg;
      return pre;
    }
    case Method::decide:
      assert(kind == CellKind::consensus);
      if (is_bottom(arg))
        throw std::invalid_argument("decide: proposal must not be the unset marker");
      if (is_bottom(state)) state = arg;
      return state;
  }
  assert(false);
  return kBottom;
}

std::string Heap::cell_name(CellId cell) const {
  const ArrayInfo& a = arrays_.at(static_cast<size_t>(cell.array));
  switch (a.dims) {
    case 0: return a.name;
    case 1: return a.name + "[" + std::to_string(cell.i) + "]";
    default:
      return a.name + "[" + std::to_string(cell.i) + "," + std::to_string(cell.j) + "]";
  }
}

SimHeap::SimHeap(std::vector<ArrayInfo> arrays) : Heap(std::move(arrays)) {
  rows_.resize(arrays_.size());
}

Word& SimHeap::slot(CellId cell) {
  assert(cell.array >= 0 && static_cast<size_t>(cell.array) < rows_.size());
  assert(cell.i >= 0 && cell.j >= 0);
  auto& rows = rows_[static_cast<size_t>(cell.array)];
  if (static_cast<size_t>(cell.i) >= rows.size()) rows.resize(cell.i + 1);
  auto& row = rows[static_cast<size_t>(cell.i)];
  if (static_cast<size_t>(cell.j) >= row.size())
    row.resize(cell.j + 1, arrays_[static_cast<size_t>(cell.array)].init);
  return row[static_cast<size_t>(cell.j)];
}

Word SimHeap::apply(CellId cell, Method m, Word arg) {
  return apply_step(arrays_[static_cast<size_t>(cell.array)].kind, m, slot(cell), arg);
}

Word SimHeap::load_raw(CellId cell) const {
  const auto& rows = rows_[static_cast<size_t>(cell.array)];
  if (static_cast<size_t>(cell.i) >= rows.size() ||
      static_cast<size_t>(cell.j) >= rows[static_cast<size_t>(cell.i)].size())
    return arrays_[static_cast<size_t>(cell.array)].init;
  return rows[static_cast<size_t>(cell.i)][static_cast<size_t>(cell.j)];
}

void SimHeap::store_raw(CellId cell, Word value) { slot(cell) = value; }

NativeHeap::NativeHeap(std::vector<ArrayInfo> arrays, const std::vector<Extent>& extents)
    : Heap(std::move(arrays)), extents_(extents) {
  assert(extents_.size() == arrays_.size());
  storage_.reserve(arrays_.size());
  for (size_t a = 0; a < arrays_.size(); ++a) {
    size_t n = static_cast<size_t>(extents_[a].rows) * static_cast<size_t>(extents_[a].cols);
    auto cells = std::make_unique<std::atomic<Word>[]>(n);
    for (size_t k = 0; k < n; ++k) cells[k].store(arrays_[a].init, std::memory_order_relaxed);
    storage_.push_back(std::move(cells));
  }
}

std::atomic<Word>& NativeHeap::slot(CellId cell) const {
  const Extent& e = extents_[static_cast<size_t>(cell.array)];
  if (cell.i < 0 || cell.j < 0 || cell.i >= e.rows || cell.j >= e.cols)
    throw std::out_of_range("NativeHeap: capacity hint exceeded for " +
                            arrays_[static_cast<size_t>(cell.array)].name);
  return storage_[static_cast<size_t>(cell.array)]
                 [static_cast<size_t>(cell.i) * static_cast<size_t>(e.cols) +
                  static_cast<size_t>(cell.j)];
}

Word NativeHeap::apply(CellId cell, Method m, Word arg) {
  std::atomic<Word>& c = slot(cell);
  switch (m) {
    case Method::read: return c.load();
    case Method::write: c.store(arg); return kOk;
    case Method::faa: return c.fetch_add(arg);
    case Method::swap: return c.exchange(arg);
    case Method::decide: {
      if (is_bottom(arg))
        throw std::invalid_argument("decide: proposal must not be the unset marker");
      Word expected = kBottom;
      if (c.compare_exchange_strong(expected, arg)) return arg;
      return expected;
    }
  }
  assert(false);
  return kBottom;
}

Word NativeHeap::load_raw(CellId cell) const { return slot(cell).load(); }

void NativeHeap::store_raw(CellId cell, Word value) { slot(cell).store(value); }

}  // namespace common2

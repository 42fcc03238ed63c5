#pragma once

#include <atomic>
#include <cassert>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "common2/word.hpp"

namespace common2 {

// Base object kinds. Each kind supports exactly the methods of its type;
// a cell is one atomic object, an array is an unbounded collection of cells
// of one kind sharing an initial value.
enum class CellKind : std::uint8_t { reg, fetch_add, swap, consensus };

enum class Method : std::uint8_t { read, write, faa, swap, decide };

const char* method_name(Method m);

// Arrays are registered per algorithm instance; a cell address is the array
// plus up to two indexes (scalars are 0-d arrays addressed with i = j = 0).
using ArrayTag = std::int16_t;

struct CellId {
  ArrayTag array = -1;
  std::int32_t i = 0;
  std::int32_t j = 0;

  friend bool operator==(const CellId&, const CellId&) = default;
};

struct ArrayInfo {
  std::string name;
  CellKind kind;
  Word init;
  int dims;  // 0, 1 or 2
};

// Sequential step semantics shared by both backends (Register read/write,
// Fetch&Add, Swap, Consensus decide). Mutates `state`, returns the method's
// return value.
Word apply_step(CellKind kind, Method m, Word& state, Word arg);

// Memory backend interface. The simulated heap serializes steps under a
// scheduler; the native heap maps each cell to a machine atomic.
class Heap {
 public:
  virtual ~Heap() = default;
  virtual Word apply(CellId cell, Method m, Word arg) = 0;
  // Raw access for snapshots/undo and tests. Never counts as a step.
  virtual Word load_raw(CellId cell) const = 0;
  virtual void store_raw(CellId cell, Word value) = 0;
  const std::vector<ArrayInfo>& arrays() const { return arrays_; }
  std::string cell_name(CellId cell) const;

 protected:
  explicit Heap(std::vector<ArrayInfo> arrays) : arrays_(std::move(arrays)) {}
  std::vector<ArrayInfo> arrays_;
};

// Growable, lazily materialized storage: a cell that was never written
// behaves exactly like a cell holding the array's initial value, and
// materialization is invisible to every step.
class SimHeap final : public Heap {
 public:
  explicit SimHeap(std::vector<ArrayInfo> arrays);
  Word apply(CellId cell, Method m, Word arg) override;
  Word load_raw(CellId cell) const override;
  void store_raw(CellId cell, Word value) override;

 private:
  Word& slot(CellId cell);
  // rows_[array][i] is materialized on first touch.
  std::vector<std::vector<std::vector<Word>>> rows_;
};

// Preallocated std::atomic cells with sequentially consistent ordering.
// Capacities are hints derived from the run configuration; the arrays are
// logically unbounded, so exceeding a hint is a harness sizing bug.
class NativeHeap final : public Heap {
 public:
  struct Extent {
    std::int32_t rows;
    std::int32_t cols;
  };
  NativeHeap(std::vector<ArrayInfo> arrays, const std::vector<Extent>& extents);
  Word apply(CellId cell, Method m, Word arg) override;
  Word load_raw(CellId cell) const override;
  void store_raw(CellId cell, Word value) override;

 private:
  std::atomic<Word>& slot(CellId cell) const;
  std::vector<Extent> extents_;
  std::vector<std::unique_ptr<std::atomic<Word>[]>> storage_;
};

}  // namespace common2

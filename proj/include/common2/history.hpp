#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "common2/objects.hpp"
#include "common2/word.hpp"

namespace common2 {

enum class Role : std::uint8_t { enqueuer, dequeuer };
const char* role_name(Role r);

enum class EventKind : std::uint8_t { invoke, respond, step };

enum class OpKind : std::uint8_t { enq, deq, raw };
const char* op_kind_name(OpKind k);

// One event of an execution. `t` is the shared-step counter: a step's t is
// the number of steps taken before it; invoke/respond events carry the
// counter without advancing it, so list order disambiguates simultaneity.
struct Event {
  std::int64_t t = 0;
  std::int32_t pid = 0;
  Role role = Role::enqueuer;
  EventKind kind = EventKind::step;
  std::int32_t op_id = -1;
  OpKind op = OpKind::raw;
  Word op_arg = kBottom;  // enq argument; kBottom for deq/raw
  // step detail (kind == step); on respond, `ret` is the operation's return
  CellId cell;
  Method method = Method::read;
  Word arg = kBottom;
  Word ret = kBottom;

  friend bool operator==(const Event&, const Event&) = default;
};

// The record of one execution: invocations, responses and shared steps in
// schedule order. Immutable once a run completes.
struct History {
  std::vector<Event> events;
  std::vector<ArrayInfo> arrays;  // for rendering cell names

  std::string op_str(const Event& e) const;
  std::string cell_name(CellId cell) const;

  // JSON-lines, one event per line, stable field order
  // {t, pid, role, kind, op, obj, method, args, ret}.
  std::string to_jsonl() const;
  std::string event_json(const Event& e) const;

  friend bool operator==(const History&, const History&);
};

}  // namespace common2

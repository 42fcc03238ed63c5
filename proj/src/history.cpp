#include "common2/history.hpp"

#include <nlohmann/json.hpp>

namespace common2 {

using json = nlohmann::ordered_json;

const char* role_name(Role r) { return r == Role::enqueuer ? "enq" : "deq"; }

const char* op_kind_name(OpKind k) {
  switch (k) {
    case OpKind::enq: return "enq";
    case OpKind::deq: return "deq";
    case OpKind::raw: return "raw";
  }
  return "?";
}

std::string History::op_str(const Event& e) const {
  std::string s = op_kind_name(e.op);
  s += "#" + std::to_string(e.op_id);
  if (e.op == OpKind::enq) s += "(" + word_str(e.op_arg) + ")";
  return s;
}

std::string History::cell_name(CellId cell) const {
  if (cell.array < 0 || static_cast<size_t>(cell.array) >= arrays.size()) return "?";
  const ArrayInfo& a = arrays[static_cast<size_t>(cell.array)];
  switch (a.dims) {
    case 0: return a.name;
    case 1: return a.name + "[" + std::to_string(cell.i) + "]";
    default:
      return a.name + "[" + std::to_string(cell.i) + "," + std::to_string(cell.j) + "]";
  }
}

static json word_json(Word w) {
  if (is_bottom(w)) return nullptr;
  return w;
}

std::string History::event_json(const Event& e) const {
  json o;
  o["t"] = e.t;
  o["pid"] = e.pid;
  o["role"] = role_name(e.role);
  switch (e.kind) {
    case EventKind::invoke: o["kind"] = "invoke"; break;
    case EventKind::respond: o["kind"] = "respond"; break;
    case EventKind::step: o["kind"] = "step"; break;
  }
  o["op"] = op_str(e);
  if (e.kind == EventKind::step) {
    o["obj"] = cell_name(e.cell);
    o["method"] = method_name(e.method);
    o["args"] = json::array();
    if (e.method != Method::read) o["args"].push_back(word_json(e.arg));
    o["ret"] = (e.method == Method::write) ? json("Ok") : word_json(e.ret);
  } else {
    o["obj"] = nullptr;
    o["method"] = nullptr;
    o["args"] = nullptr;
    o["ret"] = (e.kind == EventKind::respond)
                   ? (e.op == OpKind::enq ? json("Ok") : word_json(e.ret))
                   : json(nullptr);
  }
  return o.dump();
}

std::string History::to_jsonl() const {
  std::string out;
  for (const Event& e : events) {
    out += event_json(e);
    out += '\n';
  }
  return out;
}

bool operator==(const History& a, const History& b) { return a.events == b.events; }

}  // namespace common2

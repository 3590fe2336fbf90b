// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/synth/templates.hpp"

#include <algorithm>
#include <regex>

#include "mbl/dsl/canonical.hpp"
#include "mbl/dsl/signatures.hpp"
#include "mbl/synth/random.hpp"

namespace mbl::synth {

namespace {

using Five = std::array<std::string, 5>;

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

Five expand(Five t, const std::string& macro, const std::string& text) {
  for (auto& s : t) s = replace_all(s, macro, text);
  return t;
}

TemplateBank build_standard() {
  TemplateBank b;
  b.add("module-absolute",
        {"Create {name} at the origin, {length} mm long and {width} mm wide.",
         "Start with {name}, a {length} by {width} mm module placed at the origin.",
         "Place {name} at the origin with a length of {length} mm and a width of {width} mm.",
         "{name} sits at the origin and measures {length} mm along x and {width} mm along y.",
         "Begin the layout with {name}: {length} mm long, {width} mm wide, anchored at the origin."});
  b.add("module-absolute/point",
        {"Create {name} with its lower-left corner at {point}, {length} mm long and {width} mm wide.",
         "Start a {length} by {width} mm module {name} at {point}.",
         "Place {name} at {point} with a length of {length} mm and a width of {width} mm.",
         "{name} has its corner at {point} and measures {length} mm along x and {width} mm along y.",
         "Anchor {name} at {point}: {length} mm long, {width} mm wide."});
  b.add("module-relative",
        {"Add {name} to the {direction} of {module}, {length} mm long and {width} mm wide, centred on it.",
         "Attach {name}, measuring {length} by {width} mm, on the {direction} side of {module}, centred.",
         "{name} ({length} x {width} mm) goes directly {direction} of {module}, centred along the shared side.",
         "Place {name} against the {direction} face of {module}; it is {length} mm long, {width} mm wide and centred.",
         "On the {direction} of {module}, centre a new module {name} of {length} mm by {width} mm."});
  b.add("module-relative/aligned",
        {"Add {name} to the {direction} of {module}, {length} mm long and {width} mm wide, flush with its {alignment} edge.",
         "Attach {name}, measuring {length} by {width} mm, on the {direction} side of {module} with the {alignment} edges aligned.",
         "{name} ({length} x {width} mm) goes directly {direction} of {module}, lined up on the {alignment}.",
         "Place {name} against the {direction} face of {module}, aligned to the {alignment}; it is {length} mm long and {width} mm wide.",
         "On the {direction} of {module}, put a {length} by {width} mm module {name} aligned {alignment}."});
  b.add("module-relative/aligned/shifted",
        {"Add {name} to the {direction} of {module}, {length} mm long and {width} mm wide, aligned {alignment} and then moved {offset} mm {offset_direction}.",
         "Attach {name}, measuring {length} by {width} mm, on the {direction} side of {module}; align the {alignment} edges and shift it {offset} mm to the {offset_direction}.",
         "{name} ({length} x {width} mm) goes {direction} of {module}, lined up on the {alignment} and offset {offset} mm toward the {offset_direction}.",
         "Place {name} against the {direction} face of {module}, aligned to the {alignment} and slid {offset} mm {offset_direction}; it is {length} mm long and {width} mm wide.",
         "On the {direction} of {module}, put a {length} by {width} mm module {name} aligned {alignment}, displaced {offset} mm {offset_direction}."});
  b.add("module-relative/shifted",
        {"Add {name} to the {direction} of {module}, {length} mm long and {width} mm wide, centred and then moved {offset} mm {offset_direction}.",
         "Attach {name}, measuring {length} by {width} mm, on the {direction} side of {module}; centre it and shift it {offset} mm to the {offset_direction}.",
         "{name} ({length} x {width} mm) goes {direction} of {module}, centred and offset {offset} mm toward the {offset_direction}.",
         "Place {name} against the {direction} face of {module}, centred and slid {offset} mm {offset_direction}; it is {length} mm long and {width} mm wide.",
         "On the {direction} of {module}, centre a {length} by {width} mm module {name}, displaced {offset} mm {offset_direction}."});
  b.add("split",
        {"Cut {module} in the {direction} direction at a ratio of {ratio}.",
         "Divide {module} with a {direction} cut; the first part takes {ratio} of its depth.",
         "Use a {direction} split on {module} at ratio {ratio}.",
         "{module} is cut {direction} into two pieces, the first taking a {ratio} share.",
         "Separate {module} into two modules by a {direction} division at {ratio}."});
  b.add("merge",
        {"Merge {modules} into a single module.",
         "Combine {modules} so they form one module.",
         "Join {modules} together, removing the walls between them.",
         "{modules} are merged into one module.",
         "Fuse {modules} into one larger module."});
  b.add("unit-from-modules",
        {"Form {name} from {modules}.",
         "Group {modules} into {name}.",
         "{name} consists of {modules}.",
         "Define {name} as the combination of {modules}.",
         "Assemble {name} out of {modules}."});
  b.add("unit-directional",
        {"Form {name} from the {direction} strips of {modules}, with depths of {dimensions} mm.",
         "{name} takes the {direction} part of {modules}, {dimensions} mm deep respectively.",
         "Carve {name} out of {modules} along their {direction} sides using depths {dimensions} mm.",
         "Define {name} over {modules}, keeping {dimensions} mm from the {direction} edge of each.",
         "Build {name} from {modules}: the {direction} {dimensions} mm of each module."});

  const Five container{"{name} is a {regular} room occupying {HOST}.",
                       "Assign the free space of {HOST} to {name}, shaped as a {regular} room.",
                       "Create {name} as a {regular} room inside {HOST}.",
                       "Use {HOST} for {name}, a {regular} room.",
                       "The {regular} room {name} fills {HOST}."};
  const Five directional{
      "Along the {direction} side of {HOST}, place the {open} {name}, {dimension} mm deep.",
      "{name} takes a {dimension} mm strip on the {direction} of {HOST} and is {open}.",
      "Reserve {dimension} mm at the {direction} end of {HOST} for {name}, kept {open}.",
      "Carve {name} from the {direction} edge of {HOST} with a depth of {dimension} mm; the room is {open}.",
      "{name}: {open}, {dimension} mm deep, against the {direction} side of {HOST}."};
  const Five corner{
      "Place the {open} {name} in the {corner} corner of {HOST}, {length} mm long and {width} mm wide.",
      "{name} ({length} x {width} mm, {open}) sits in the {corner} corner of {HOST}.",
      "Tuck {name} into the {corner} corner of {HOST}; it measures {length} by {width} mm and is {open}.",
      "The {corner} corner of {HOST} holds {name}, {length} mm by {width} mm, {open}.",
      "Fit a {length} by {width} mm room called {name} into the {corner} corner of {HOST}, {open}."};
  const Five corner_shifted{
      "Place the {open} {name} in the {corner} corner of {HOST}, {length} mm long and {width} mm wide, moved {offset} mm {offset_direction}.",
      "{name} ({length} x {width} mm, {open}) starts from the {corner} corner of {HOST} and is shifted {offset} mm {offset_direction}.",
      "Tuck {name} into the {corner} corner of {HOST}, then slide it {offset} mm to the {offset_direction}; it measures {length} by {width} mm and is {open}.",
      "The {corner} corner of {HOST} anchors {name}, {length} mm by {width} mm, {open}, offset {offset} mm {offset_direction}.",
      "Fit a {length} by {width} mm room called {name} at the {corner} corner of {HOST}, {open}, displaced {offset} mm {offset_direction}."};
  for (const auto& [suffix, host] : std::vector<std::pair<std::string, std::string>>{
           {"", "{unit}"}, {"/module", "{module} of {unit}"}}) {
    b.add("room-container" + suffix, expand(container, "{HOST}", host));
    b.add("room-directional" + suffix, expand(directional, "{HOST}", host));
    b.add("room-corner" + suffix, expand(corner, "{HOST}", host));
    b.add("room-corner" + suffix + "/shifted", expand(corner_shifted, "{HOST}", host));
  }
  b.add("room-relative",
        {"Place the {open} {name} to the {direction} of {room} in {unit}, {length} mm long and {width} mm wide, centred on it.",
         "{name} ({length} x {width} mm, {open}) sits {direction} of {room} within {unit}, centred.",
         "Next to {room}, on its {direction} side, add {name} to {unit}: {length} by {width} mm, centred, {open}.",
         "In {unit}, {name} is centred on the {direction} of {room}, measuring {length} mm by {width} mm, {open}.",
         "Put a {length} by {width} mm room called {name} directly {direction} of {room} in {unit}, centred and {open}."});
  b.add("room-relative/aligned",
        {"Place the {open} {name} to the {direction} of {room} in {unit}, {length} mm long and {width} mm wide, aligned {alignment}.",
         "{name} ({length} x {width} mm, {open}) sits {direction} of {room} within {unit}, flush on the {alignment}.",
         "Next to {room}, on its {direction} side, add {name} to {unit}: {length} by {width} mm, {alignment} edges aligned, {open}.",
         "In {unit}, {name} lies {direction} of {room} lined up on the {alignment}, measuring {length} mm by {width} mm, {open}.",
         "Put a {length} by {width} mm room called {name} directly {direction} of {room} in {unit}, aligned to the {alignment} and {open}."});
  b.add("room-relative/aligned/shifted",
        {"Place the {open} {name} to the {direction} of {room} in {unit}, {length} mm long and {width} mm wide, aligned {alignment} and moved {offset} mm {offset_direction}.",
         "{name} ({length} x {width} mm, {open}) sits {direction} of {room} within {unit}, flush on the {alignment}, shifted {offset} mm {offset_direction}.",
         "Next to {room}, on its {direction} side, add {name} to {unit}: {length} by {width} mm, {alignment} edges aligned, then {offset} mm {offset_direction}, {open}.",
         "In {unit}, {name} lies {direction} of {room} lined up on the {alignment} and offset {offset} mm {offset_direction}, measuring {length} mm by {width} mm, {open}.",
         "Put a {length} by {width} mm room called {name} {direction} of {room} in {unit}, aligned to the {alignment}, displaced {offset} mm {offset_direction} and {open}."});
  b.add("room-relative/shifted",
        {"Place the {open} {name} to the {direction} of {room} in {unit}, {length} mm long and {width} mm wide, centred and moved {offset} mm {offset_direction}.",
         "{name} ({length} x {width} mm, {open}) sits {direction} of {room} within {unit}, centred then shifted {offset} mm {offset_direction}.",
         "Next to {room}, on its {direction} side, add {name} to {unit}: {length} by {width} mm, centred, then {offset} mm {offset_direction}, {open}.",
         "In {unit}, {name} lies {direction} of {room}, centred and offset {offset} mm {offset_direction}, measuring {length} mm by {width} mm, {open}.",
         "Put a {length} by {width} mm room called {name} {direction} of {room} in {unit}, centred, displaced {offset} mm {offset_direction} and {open}."});
  b.add("room-at-point",
        {"Centre {name} at {center} in {unit}, with a clear size of {length} by {width} mm.",
         "{name} is a {length} by {width} mm room of {unit} centred on {center}.",
         "Around the point {center} of {unit}, lay out {name} measuring {length} mm by {width} mm inside its walls.",
         "In {unit}, put {name} with its centre at {center}; the clear interior is {length} x {width} mm.",
         "Create {name} in {unit}: centre {center}, interior {length} mm long and {width} mm wide."});

  const Five door{
      "Add a {dimension} mm door to {OWNER} on its {direction} wall, centred, set {set} by {set_dimension} mm.",
      "{OWNER} gets a centred door, {dimension} mm wide, in the {direction} wall (set {set}, {set_dimension} mm).",
      "Put a door of width {dimension} mm in the middle of the {direction} wall of {OWNER}, set {set} {set_dimension} mm.",
      "Centre a {dimension} mm door on the {direction} side of {OWNER}; set it {set} by {set_dimension} mm.",
      "The {direction} wall of {OWNER} receives a centred {dimension} mm door, set {set} {set_dimension} mm."};
  const Five door_aligned{
      "Add a {dimension} mm door to {OWNER} on its {direction} wall, {offset} mm from the {alignment} end, set {set} by {set_dimension} mm.",
      "{OWNER} gets a {dimension} mm door in the {direction} wall, {offset} mm in from the {alignment} (set {set}, {set_dimension} mm).",
      "Put a door of width {dimension} mm in the {direction} wall of {OWNER}, kept {offset} mm from its {alignment} end, set {set} {set_dimension} mm.",
      "On the {direction} side of {OWNER}, place a {dimension} mm door toward the {alignment} with a {offset} mm margin; set it {set} by {set_dimension} mm.",
      "The {direction} wall of {OWNER} receives a {dimension} mm door aligned {alignment} at {offset} mm, set {set} {set_dimension} mm."};
  const Five midpoint{
      "Add a {dimension} mm door at the midpoint of the {direction} wall of {OWNER}, set {set} by {set_dimension} mm.",
      "{OWNER} gets a door, {dimension} mm wide, at the middle of its {direction} wall (set {set}, {set_dimension} mm).",
      "At the midpoint of the {direction} side of {OWNER}, put a door of width {dimension} mm, set {set} {set_dimension} mm.",
      "Halfway along the {direction} wall of {OWNER}, insert a {dimension} mm door; set it {set} by {set_dimension} mm.",
      "The {direction} wall of {OWNER} receives a {dimension} mm door at its midpoint, set {set} {set_dimension} mm."};
  for (const auto& [owner, slot] :
       std::vector<std::pair<std::string, std::string>>{{"room", "{room}"}, {"module", "{module}"}}) {
    b.add("door-for-" + owner, expand(door, "{OWNER}", slot));
    b.add("door-for-" + owner + "/aligned", expand(door_aligned, "{OWNER}", slot));
    b.add("door-midpoint/" + owner, expand(midpoint, "{OWNER}", slot));
  }
  b.add("hole",
        {"Open a {dimension} mm hole in the {direction} wall of {module}, centred.",
         "Cut a centred opening {dimension} mm wide into the {direction} wall of {module}.",
         "{module} gets a {dimension} mm hole in the middle of its {direction} wall.",
         "Make a {dimension} mm passage through the {direction} wall of {module}, centred on it.",
         "The {direction} wall of {module} is opened up by a centred {dimension} mm hole."});
  b.add("hole/aligned",
        {"Open a {dimension} mm hole in the {direction} wall of {module}, {offset} mm from its {alignment} end.",
         "Cut an opening {dimension} mm wide into the {direction} wall of {module}, {offset} mm in from the {alignment}.",
         "{module} gets a {dimension} mm hole in its {direction} wall, aligned {alignment} with a {offset} mm margin.",
         "Make a {dimension} mm passage through the {direction} wall of {module} toward the {alignment}, {offset} mm from the end.",
         "The {direction} wall of {module} is opened up by a {dimension} mm hole placed {offset} mm from the {alignment} end."});
  return b;
}

const dsl::ArgValue* bound(const dsl::ActionStatement& s, std::string_view name) {
  for (const auto& b : dsl::bind_arguments(s)) {
    if (b.param && b.name == name) return &b.arg->value;
  }
  return nullptr;
}

std::string text_or(const dsl::ActionStatement& s, std::string_view name, std::string fallback) {
  const auto* v = bound(s, name);
  const auto* t = v ? std::get_if<dsl::Text>(v) : nullptr;
  return t ? t->value : fallback;
}

double number_or(const dsl::ActionStatement& s, std::string_view name, double fallback) {
  const auto* v = bound(s, name);
  const auto* n = v ? std::get_if<dsl::Number>(v) : nullptr;
  return n ? n->value : fallback;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += k + 1 == items.size() ? " and " : ", ";
    out += items[k];
  }
  return out;
}

std::string label_of(const LabelMap& labels, const std::string& name) {
  const auto it = labels.find(name);
  return it == labels.end() ? name : it->second;
}

}  // namespace

void TemplateBank::add(std::string scenario, std::array<std::string, 5> templates) {
  bank_[std::move(scenario)] = std::move(templates);
}

const std::array<std::string, 5>& TemplateBank::at(const std::string& scenario) const {
  const auto it = bank_.find(scenario);
  if (it == bank_.end()) throw MissingTemplate(scenario);
  return it->second;
}

const TemplateBank& TemplateBank::standard() {
  static const TemplateBank bank = build_standard();
  return bank;
}

std::string scenario_of(const dsl::ActionStatement& s) {
  if (!s.op || s.signature < 0) return s.callee;
  std::string key(dsl::to_string(*s.op));
  const bool aligned = text_or(s, "alignment", "none") != "none";
  const bool shifted = text_or(s, "offset_direction", "none") != "none" && number_or(s, "offset", 0.0) != 0.0;
  const bool host = bound(s, "module") != nullptr;
  switch (*s.op) {
    case dsl::OpKind::ModuleAbsolute: {
      const auto* p = bound(s, "point");
      const auto* pv = p ? std::get_if<dsl::PointValue>(p) : nullptr;
      if (pv && pv->explicit_point && !(pv->explicit_point->x == 0.0 && pv->explicit_point->y == 0.0)) key += "/point";
      break;
    }
    case dsl::OpKind::ModuleRelative:
    case dsl::OpKind::RoomRelative:
      if (aligned) key += "/aligned";
      if (shifted) key += "/shifted";
      break;
    case dsl::OpKind::RoomContainer:
    case dsl::OpKind::RoomDirectional:
      if (host) key += "/module";
      break;
    case dsl::OpKind::RoomCorner:
      if (host) key += "/module";
      if (shifted) key += "/shifted";
      break;
    case dsl::OpKind::DoorForRoom:
    case dsl::OpKind::DoorForModule:
    case dsl::OpKind::Hole:
      if (aligned) key += "/aligned";
      break;
    case dsl::OpKind::DoorMidpoint:
      key += dsl::signature(s.signature).find("room") ? "/room" : "/module";
      break;
    default: break;
  }
  return key;
}

void record_labels(const dsl::ActionStatement& s, LabelMap& labels) {
  if (!s.op) return;
  switch (*s.op) {
    case dsl::OpKind::Split: {
      const auto* m = bound(s, "module");
      const auto* r = m ? std::get_if<dsl::Ref>(m) : nullptr;
      const std::string base = r ? label_of(labels, r->name) : "Module";
      const bool we = text_or(s, "direction", "") == "west-east";
      for (const auto& p : s.pieces) {
        labels[p.binding.name] = base + (p.index == 0 ? (we ? " North" : " West") : (we ? " South" : " East"));
      }
      return;
    }
    case dsl::OpKind::Merge: {
      const auto* m = bound(s, "modules");
      const auto* l = m ? std::get_if<dsl::RefList>(m) : nullptr;
      if (!l || l->names.empty()) return;
      const std::string label = label_of(labels, l->names.front());
      for (const auto& n : l->names) labels[n] = label;
      if (s.result) labels[s.result->name] = label;
      return;
    }
    default: {
      const auto* v = bound(s, "name");
      const auto* t = v ? std::get_if<dsl::Text>(v) : nullptr;
      if (t && s.result) labels[s.result->name] = t->value;
    }
  }
}

std::map<std::string, std::string> slot_values(const dsl::ActionStatement& s, const LabelMap& labels) {
  std::map<std::string, std::string> out;
  if (s.signature < 0) return out;
  const auto& sig = dsl::signature(s.signature);
  for (const auto& p : sig.params) {
    const dsl::ArgValue* v = bound(s, p.name);
    if (!v && p.fallback) v = &*p.fallback;
    if (!v) continue;
    std::string text = std::visit(
        [&](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, dsl::Number>) {
            return dsl::format_number(x.value);
          } else if constexpr (std::is_same_v<T, dsl::Text>) {
            return x.value;
          } else if constexpr (std::is_same_v<T, dsl::Boolean>) {
            if (p.name == "open") return x.value ? "open-plan" : "enclosed";
            return x.value ? "regular" : "free-form";
          } else if constexpr (std::is_same_v<T, dsl::PointValue>) {
            const auto q = x.resolve();
            return "(" + dsl::format_number(q.x) + ", " + dsl::format_number(q.y) + ")";
          } else if constexpr (std::is_same_v<T, dsl::Ref>) {
            return label_of(labels, x.name);
          } else if constexpr (std::is_same_v<T, dsl::RefList>) {
            std::vector<std::string> items;
            for (const auto& n : x.names) items.push_back(label_of(labels, n));
            return join(items);
          } else {
            std::vector<std::string> items;
            for (double d : x.values) items.push_back(dsl::format_number(d));
            return join(items);
          }
        },
        *v);
    out.emplace(std::string(p.name), std::move(text));
  }
  return out;
}

namespace {

bool ends_with_article(const std::string& s) {
  const auto n = s.size();
  if (n < 2 || (s.compare(n - 2, 2, "a ") != 0 && s.compare(n - 2, 2, "A ") != 0)) return false;
  return n == 2 || s[n - 3] == ' ';
}

// Numbers, number lists and points have a fixed shape, which keeps a slot
// from swallowing the comma-separated list next to it.
std::string slot_pattern(const std::string& name) {
  static const std::string num = "-?[0-9][0-9.e+-]*";
  if (name == "dimensions") return "(" + num + "(?:(?:, | and )" + num + ")*)";
  if (name == "center" || name == "point") return "(\\([^)]*\\))";
  if (name == "length" || name == "width" || name == "dimension" || name == "offset" || name == "ratio" ||
      name == "set_dimension") {
    return "(" + num + ")";
  }
  return "(.+?)";
}

}  // namespace

std::string fill_template(const std::string& tmpl, const std::map<std::string, std::string>& slots) {
  std::string out;
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    const auto open = tmpl.find('{', pos);
    if (open == std::string::npos) break;
    const auto close = tmpl.find('}', open);
    out += tmpl.substr(pos, open - pos);
    const auto name = tmpl.substr(open + 1, close - open - 1);
    const auto it = slots.find(name);
    const std::string value = it == slots.end() ? "{" + name + "}" : it->second;
    // "a 8000 mm" reads "an 8000 mm"
    if (!value.empty() && value[0] == '8' && ends_with_article(out)) out.insert(out.size() - 1, "n");
    out += value;
    pos = close + 1;
  }
  out += tmpl.substr(std::min(pos, tmpl.size()));
  // sentences open with a capital even when a slot comes first
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z' && tmpl[0] == '{') out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out;
}

std::map<std::string, std::string> extract_slots(const std::string& tmpl, const std::string& text) {
  std::string pattern = "^";
  std::vector<std::string> names;
  std::size_t pos = 0;
  auto literal = [&](const std::string& lit) {
    for (char c : lit) {
      if (std::string("\\^$.|?*+()[]{}").find(c) != std::string::npos) pattern += '\\';
      pattern += c;
    }
  };
  while (pos < tmpl.size()) {
    const auto open = tmpl.find('{', pos);
    if (open == std::string::npos) break;
    const auto close = tmpl.find('}', open);
    auto lit = tmpl.substr(pos, open - pos);
    if (ends_with_article(lit)) {
      literal(lit.substr(0, lit.size() - 2));
      pattern += "an? ";
    } else {
      literal(lit);
    }
    names.push_back(tmpl.substr(open + 1, close - open - 1));
    pattern += slot_pattern(names.back());
    pos = close + 1;
  }
  literal(tmpl.substr(std::min(pos, tmpl.size())));
  pattern += "$";
  std::smatch m;
  std::map<std::string, std::string> out;
  const std::regex re(pattern, std::regex::icase);
  if (!std::regex_match(text, m, re)) return out;
  for (std::size_t k = 0; k < names.size(); ++k) out[names[k]] = m[k + 1];
  return out;
}

Description describe_program(const dsl::Program& p, const TemplateBank& bank, std::uint64_t seed,
                             const DescribeOptions& opts) {
  Rng rng(seed);
  LabelMap labels;
  std::vector<Verbalized> parts;
  for (std::size_t k = 0; k < p.statements.size(); ++k) {
    const auto& s = p.statements[k];
    Verbalized v;
    v.statement = k;
    v.scenario = scenario_of(s);
    const auto& five = bank.at(v.scenario);
    v.template_index = static_cast<int>(rng.below(5));
    v.sentence = fill_template(five[static_cast<std::size_t>(v.template_index)], slot_values(s, labels));
    parts.push_back(std::move(v));
    record_labels(s, labels);
  }
  if (opts.shuffle && parts.size() > 1) {
    // random topological order over "uses a name declared by" edges
    std::vector<std::vector<std::size_t>> deps(parts.size());
    for (std::size_t k = 0; k < p.statements.size(); ++k) {
      for (const auto& b : dsl::bind_arguments(p.statements[k])) {
        std::vector<std::string> refs;
        if (const auto* r = std::get_if<dsl::Ref>(&b.arg->value)) refs.push_back(r->name);
        if (const auto* l = std::get_if<dsl::RefList>(&b.arg->value)) refs = l->names;
        for (const auto& n : refs) {
          for (std::size_t j = 0; j < k; ++j) {
            const auto names = dsl::declared_names(p.statements[j]);
            if (std::find(names.begin(), names.end(), n) != names.end()) deps[k].push_back(j);
          }
        }
      }
      // merges and splits change what later statements see
      if (k > 0 && p.statements[k].op &&
          (*p.statements[k].op == dsl::OpKind::Merge || *p.statements[k].op == dsl::OpKind::Split)) {
        for (std::size_t j = 0; j < k; ++j) deps[k].push_back(j);
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (p.statements[j].op && (*p.statements[j].op == dsl::OpKind::Merge || *p.statements[j].op == dsl::OpKind::Split)) {
          deps[k].push_back(j);
        }
      }
    }
    std::vector<char> done(parts.size(), 0);
    std::vector<Verbalized> ordered;
    while (ordered.size() < parts.size()) {
      std::vector<std::size_t> ready;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (done[k]) continue;
        if (std::all_of(deps[k].begin(), deps[k].end(), [&](std::size_t j) { return done[j] != 0; })) ready.push_back(k);
      }
      const std::size_t pick = ready[rng.below(ready.size())];
      done[pick] = 1;
      ordered.push_back(parts[pick]);
    }
    parts = std::move(ordered);
  }
  Description d;
  for (const auto& v : parts) {
    if (!d.text.empty()) d.text += ' ';
    d.text += v.sentence;
  }
  d.parts = std::move(parts);
  return d;
}

}  // namespace mbl::synth

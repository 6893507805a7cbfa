#include "tqnet/netsjson.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace tqnet::netsjson {

using nlohmann::json;

namespace {

json number(Value v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("netsjson: non-finite value cannot be stored");
  }
  if (v == std::trunc(v) && std::fabs(v) < 9007199254740992.0) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

json quantity_json(const TemporalQuantity& q) {
  json tq = json::array();
  for (const Interval& iv : q) tq.push_back({iv.start, iv.finish, number(iv.value)});
  return tq;
}

// --- reading -------------------------------------------------------------

const json& member(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path, std::string("missing member '") + key + "'");
  return *it;
}

void expect(bool ok, const std::string& path, const char* what) {
  if (!ok) throw SchemaError(path, what);
}

std::int64_t get_int(const json& obj, const std::string& path, const char* key) {
  const json& v = member(obj, path, key);
  expect(v.is_number_integer(), path + "/" + key, "expected an integer");
  return v.get<std::int64_t>();
}

bool get_bool(const json& obj, const std::string& path, const char* key) {
  const json& v = member(obj, path, key);
  expect(v.is_boolean(), path + "/" + key, "expected a boolean");
  return v.get<bool>();
}

TemporalQuantity read_quantity(const json& tq, const std::string& path) {
  expect(tq.is_array(), path, "expected an array of [start, finish, value]");
  std::vector<Interval> intervals;
  intervals.reserve(tq.size());
  for (std::size_t k = 0; k < tq.size(); ++k) {
    const json& t = tq[k];
    const std::string p = path + "/" + std::to_string(k);
    expect(t.is_array() && t.size() == 3, p, "expected [start, finish, value]");
    expect(t[0].is_number_integer(), p + "/0", "start must be an integer");
    expect(t[1].is_number_integer(), p + "/1", "finish must be an integer");
    expect(t[2].is_number(), p + "/2", "value must be a number");
    intervals.push_back({t[0].get<Time>(), t[1].get<Time>(), t[2].get<Value>()});
  }
  try {
    return TemporalQuantity(std::move(intervals));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

void write(std::ostream& out, const TemporalNetwork& net) {
  json info = {
      {"kind", std::string(to_string(net.kind()))},
      {"directed", net.directed()},
      {"twoMode", net.two_mode()},
      {"time", {{"first", net.horizon().first}, {"last", net.horizon().last}}},
      {"nodes", net.nodes().size()},
      {"links", net.links().size()},
      {"modes", {net.nodes().count(1), net.nodes().count(2)}},
  };
  out << "{\n\"format\": " << json(kFormat).dump() << ",\n";
  out << "\"info\": " << info.dump() << ",\n";
  out << "\"nodes\": [";
  const auto nodes = net.nodes().all();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    json n = {{"id", i + 1}, {"lab", nodes[i].label}, {"mode", nodes[i].mode}};
    out << (i == 0 ? "\n " : ",\n ") << n.dump();
  }
  out << (nodes.empty() ? "],\n" : "\n],\n");
  out << "\"links\": [";
  const auto links = net.links();
  for (std::size_t i = 0; i < links.size(); ++i) {
    json l = {{"tail", links[i].tail},
              {"head", links[i].head},
              {"tq", quantity_json(links[i].quantity)}};
    out << (i == 0 ? "\n " : ",\n ") << l.dump();
  }
  out << (links.empty() ? "]\n}\n" : "\n]\n}\n");
}

std::string to_string(const TemporalNetwork& net) {
  std::ostringstream os;
  write(os, net);
  return os.str();
}

void save(const std::filesystem::path& path, const TemporalNetwork& net) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write(out, net);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

TemporalNetwork from_string(const std::string& text) {
  const json doc = parse_document(text);
  expect(doc.is_object(), "", "document must be an object");
  const json& format = member(doc, "", "format");
  expect(format.is_string() && format.get<std::string>() == kFormat, "/format",
         "unsupported format tag");

  const json& info = member(doc, "", "info");
  expect(info.is_object(), "/info", "expected an object");
  const json& kind_j = member(info, "/info", "kind");
  expect(kind_j.is_string(), "/info/kind", "expected a string");
  NetworkShape shape;
  try {
    shape.kind = parse_kind(kind_j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/info/kind", e.what());
  }
  shape.directed = get_bool(info, "/info", "directed");
  shape.two_mode = get_bool(info, "/info", "twoMode");
  const json& time = member(info, "/info", "time");
  expect(time.is_object(), "/info/time", "expected an object");
  const Time first = get_int(time, "/info/time", "first");
  const Time last = get_int(time, "/info/time", "last");
  expect(first <= last, "/info/time", "first must not exceed last");

  const json& nodes_j = member(doc, "", "nodes");
  expect(nodes_j.is_array(), "/nodes", "expected an array");
  NodeTable nodes;
  for (std::size_t i = 0; i < nodes_j.size(); ++i) {
    const std::string p = "/nodes/" + std::to_string(i);
    const json& n = nodes_j[i];
    expect(n.is_object(), p, "expected an object");
    expect(get_int(n, p, "id") == static_cast<std::int64_t>(i + 1), p + "/id",
           "ids must be contiguous from 1 in order");
    const json& lab = member(n, p, "lab");
    expect(lab.is_string(), p + "/lab", "expected a string");
    const auto mode = get_int(n, p, "mode");
    expect(mode == 1 || (mode == 2 && shape.two_mode), p + "/mode",
           "mode must be 1, or 2 in a two-mode network");
    try {
      nodes.add(lab.get<std::string>(), static_cast<int>(mode));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(p + "/lab", e.what());
    }
  }
  if (info.contains("nodes")) {
    expect(get_int(info, "/info", "nodes") ==
               static_cast<std::int64_t>(nodes_j.size()),
           "/info/nodes", "count disagrees with the nodes array");
  }

  const json& links_j = member(doc, "", "links");
  expect(links_j.is_array(), "/links", "expected an array");
  std::vector<Link> links;
  links.reserve(links_j.size());
  for (std::size_t i = 0; i < links_j.size(); ++i) {
    const std::string p = "/links/" + std::to_string(i);
    const json& l = links_j[i];
    expect(l.is_object(), p, "expected an object");
    const auto tail = get_int(l, p, "tail");
    const auto head = get_int(l, p, "head");
    expect(tail >= 1 && static_cast<std::size_t>(tail) <= nodes.size(), p + "/tail",
           "unknown node id");
    expect(head >= 1 && static_cast<std::size_t>(head) <= nodes.size(), p + "/head",
           "unknown node id");
    links.push_back({static_cast<NodeId>(tail), static_cast<NodeId>(head),
                     read_quantity(member(l, p, "tq"), p + "/tq")});
  }
  if (info.contains("links")) {
    expect(get_int(info, "/info", "links") ==
               static_cast<std::int64_t>(links_j.size()),
           "/info/links", "count disagrees with the links array");
  }

  TemporalNetwork net;
  try {
    net = TemporalNetwork(std::move(nodes), std::move(links),
                          TimeHorizon(first, last), shape);
    verify_kind(net);
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/links", e.what());
  }
  return net;
}

TemporalNetwork read(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return from_string(text);
}

TemporalNetwork load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read(in);
}

TemporalQuantity parse_quantity(const std::string& text) {
  return read_quantity(parse_document(text), "");
}

std::string quantity_to_json(const TemporalQuantity& q) {
  return quantity_json(q).dump();
}

}  // namespace tqnet::netsjson

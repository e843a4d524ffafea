#include "wdual/poset_io.hpp"

#include "wdual/error.hpp"

#include <fstream>
#include <sstream>

namespace wdual {

nlohmann::json poset_to_json(const GradedPoset &P) {
  nlohmann::json covers = nlohmann::json::array();
  for (const Cover &c : P.covers())
    covers.push_back({c.lower, c.upper});
  return {{"elements", P.names()}, {"covers", covers}};
}

GradedPoset poset_from_json(const nlohmann::json &j) {
  try {
    auto names = j.at("elements").get<std::vector<std::string>>();
    std::vector<Cover> covers;
    for (const auto &c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2)
        throw Error(ErrorKind::Parse, "cover must be a pair of indices");
      covers.push_back({c[0].get<ElementId>(), c[1].get<ElementId>()});
    }
    return GradedPoset(std::move(names), std::move(covers));
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

GradedPoset read_poset_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
  return poset_from_json(j);
}

namespace {

std::string dot_quote(const std::string &s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\')
      out += '\\';
    out += ch;
  }
  return out + '"';
}

} // namespace

std::string poset_to_dot(const GradedPoset &P,
                         const std::vector<std::string> &edge_labels) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (ElementId x = 0; x < P.size(); ++x)
    os << "  n" << x << " [label=" << dot_quote(P.name(x)) << "];\n";
  for (CoverId c = 0; c < P.cover_count(); ++c) {
    const Cover &cv = P.cover(c);
    os << "  n" << cv.lower << " -> n" << cv.upper;
    if (c < edge_labels.size())
      os << " [label=" << dot_quote(edge_labels[c]) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace wdual

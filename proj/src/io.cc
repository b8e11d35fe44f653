// Copyright 2026 The fifo-routes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fifo_routes/io.h"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "fifo_routes/csv.h"

namespace fifo_routes {

namespace {

using Json = nlohmann::ordered_json;

Json sequence_json(const StopSequence& seq) {
  Json a = Json::array();
  for (const auto& s : seq.stops) a.push_back(s.str());
  return a;
}

StopSequence sequence_from(const Json& a) {
  StopSequence seq;
  for (const auto& s : a) seq.stops.emplace_back(s.get<std::string>());
  return seq;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

void check_version(const Json& doc) {
  if (!doc.is_object() || !doc.contains("version") ||
      doc["version"] != std::string(kFormatVersion)) {
    throw FormatError("expected a document with version \"" + std::string(kFormatVersion) + "\"");
  }
}

}  // namespace

std::string timetable_to_json(const Timetable& timetable) {
  Json doc;
  doc["version"] = kFormatVersion;
  Json stations = Json::array();
  for (const auto& s : timetable.stations) stations.push_back(s.str());
  doc["stations"] = std::move(stations);
  Json trips = Json::array();
  for (const auto& trip : timetable.trips) {
    Json events = Json::array();
    for (const auto& e : trip.events) {
      events.push_back({{"stop", e.stop.str()},
                        {"arrival_seconds", e.arrival.seconds()},
                        {"departure_seconds", e.departure.seconds()}});
    }
    trips.push_back({{"id", trip.id}, {"events", std::move(events)}});
  }
  doc["trips"] = std::move(trips);
  return doc.dump(2) + "\n";
}

Timetable timetable_from_json(std::string_view text) {
  const Json doc = parse(text);
  check_version(doc);
  Timetable tt;
  try {
    for (const auto& s : doc.at("stations")) tt.stations.emplace_back(s.get<std::string>());
    for (const auto& t : doc.at("trips")) {
      Trip trip;
      trip.id = t.at("id").get<std::string>();
      for (const auto& e : t.at("events")) {
        trip.events.push_back(StopEvent{StopId(e.at("stop").get<std::string>()),
                                        TimePoint(e.at("arrival_seconds").get<std::int64_t>()),
                                        TimePoint(e.at("departure_seconds").get<std::int64_t>())});
      }
      if (trip.events.empty()) throw FormatError("trip '" + trip.id + "' has no events");
      if (auto v = validate_trip(trip); !v.empty()) {
        throw FormatError("trip '" + trip.id + "': " + v.front().message);
      }
      tt.trips.push_back(std::move(trip));
    }
    check_timetable(tt);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed timetable: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed timetable: ") + e.what());
  }
  return tt;
}

std::string assignment_to_json(const RoutePartition& partition, const Timetable& timetable,
                               const AntichainCertificate* certificate) {
  std::unordered_map<std::string_view, const Trip*> by_id;
  for (const auto& trip : timetable.trips) by_id.emplace(trip.id, &trip);
  Json doc;
  doc["version"] = kFormatVersion;
  Json routes = Json::array();
  for (const auto& route : partition.routes) {
    Json r;
    r["route_id"] = route.id;
    auto it = route.trips.empty() ? by_id.end() : by_id.find(route.trips.front());
    r["stop_sequence"] =
        it == by_id.end() ? Json::array() : sequence_json(stop_sequence_of(*it->second));
    r["trip_ids"] = route.trips;
    routes.push_back(std::move(r));
  }
  doc["routes"] = std::move(routes);

  Json counts = Json::array();
  for (const auto& [seq, n] : partition.per_group_counts) {
    counts.push_back({{"stop_sequence", sequence_json(seq)}, {"routes", n}});
  }
  doc["summary"] = {{"algorithm", to_string(partition.algorithm)},
                    {"total_routes", partition.routes.size()},
                    {"total_trips", partition.total_trips()},
                    {"single_event_trips", partition.single_event_trips},
                    {"per_group_counts", std::move(counts)}};
  if (certificate != nullptr) {
    Json cert = Json::array();
    for (const auto& [seq, ids] : certificate->groups) {
      cert.push_back({{"stop_sequence", sequence_json(seq)}, {"trip_ids", ids}});
    }
    doc["certificate"] = std::move(cert);
  }
  return doc.dump(2) + "\n";
}

std::string assignment_to_csv(const RoutePartition& partition) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& route : partition.routes) {
    for (const auto& id : route.trips) {
      const bool quote = id.find_first_of(",\"\r\n") != std::string::npos;
      if (quote) {
        out += '"';
        for (char c : id) {
          if (c == '"') out += '"';
          out += c;
        }
        out += '"';
      } else {
        out += id;
      }
      out += ',';
      out += route.id;
      out += '\n';
    }
  }
  return out;
}

RouteAssignment assignment_from_json(std::string_view text) {
  const Json doc = parse(text);
  check_version(doc);
  RouteAssignment a;
  try {
    for (const auto& r : doc.at("routes")) {
      a.partition.routes.push_back(
          Route{r.at("route_id").get<std::string>(), r.at("trip_ids").get<std::vector<std::string>>()});
    }
    if (doc.contains("summary")) {
      const auto& summary = doc["summary"];
      if (auto alg = parse_algorithm(summary.at("algorithm").get<std::string>())) {
        a.partition.algorithm = *alg;
      }
      for (const auto& g : summary.at("per_group_counts")) {
        a.partition.per_group_counts[sequence_from(g.at("stop_sequence"))] =
            g.at("routes").get<std::size_t>();
      }
      a.partition.single_event_trips = summary.value("single_event_trips", std::size_t{0});
    }
    if (doc.contains("certificate")) {
      AntichainCertificate cert;
      for (const auto& g : doc["certificate"]) {
        cert.groups[sequence_from(g.at("stop_sequence"))] =
            g.at("trip_ids").get<std::vector<std::string>>();
      }
      a.certificate = std::move(cert);
    }
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed route assignment: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed route assignment: ") + e.what());
  }
  return a;
}

RouteAssignment assignment_from_csv(std::string_view text) {
  CsvReader reader(text);
  std::vector<std::string> f;
  RouteAssignment a;
  try {
    if (!reader.next(f) || f.size() != 2 || f[0] != "trip_id" || f[1] != "route_id") {
      throw FormatError("expected CSV header \"" + std::string(kCsvHeader) + "\"");
    }
    std::unordered_map<std::string, std::size_t> slot;
    while (reader.next(f)) {
      if (f.size() == 1 && f[0].empty()) continue;
      if (f.size() != 2) {
        throw FormatError("line " + std::to_string(reader.line()) + ": expected 2 fields");
      }
      auto [it, inserted] = slot.try_emplace(f[1], a.partition.routes.size());
      if (inserted) a.partition.routes.push_back(Route{f[1], {}});
      a.partition.routes[it->second].trips.push_back(f[0]);
    }
  } catch (const CsvError& e) {
    throw FormatError(e.what());
  }
  return a;
}

std::string ingest_report_to_json(const IngestReport& report) {
  Json reasons = Json::object();
  for (const auto& [k, v] : report.drop_reasons) reasons[k] = v;
  Json doc = {{"trips_loaded", report.trips_loaded},
              {"trips_dropped", report.trips_dropped},
              {"drop_reasons", std::move(reasons)},
              {"stations_seen", report.stations_seen},
              {"rows_skipped", report.rows_skipped},
              {"frequencies_present", report.frequencies_present},
              {"frequencies_ignored", report.frequencies_ignored}};
  return doc.dump(2) + "\n";
}

std::string comparison_to_json(const ComparisonStats& stats) {
  Json groups = Json::array();
  for (const auto& g : stats.groups) {
    groups.push_back({{"stop_sequence", sequence_json(g.sequence)},
                      {"trips", g.trips},
                      {"optimal", g.optimal},
                      {"greedy", g.greedy},
                      {"trivial", g.trivial}});
  }
  Json doc = {{"groups", std::move(groups)},
              {"totals",
               {{"trips", stats.total_trips},
                {"optimal", stats.total_optimal},
                {"greedy", stats.total_greedy},
                {"trivial", stats.total_trivial}}},
              {"groups_where_greedy_suboptimal", stats.groups_where_greedy_suboptimal}};
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw FormatError("failed writing " + path.string());
}

Timetable load_timetable(const std::filesystem::path& path) {
  return timetable_from_json(read_text_file(path));
}

RouteAssignment load_assignment(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  std::string_view head(text);
  if (head.starts_with("\xEF\xBB\xBF")) head.remove_prefix(3);
  if (head.starts_with(kCsvHeader)) return assignment_from_csv(text);
  return assignment_from_json(text);
}

}  // namespace fifo_routes

#include "rbeta/report_json.hpp"

#include <cmath>
#include <cstdio>

namespace rbeta {

namespace {

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json real_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

const char* verdict_name(Verdict v) { return v == Verdict::pass ? "pass" : "fail"; }

}  // namespace

Json complex_json(Complex z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json node_value_json(const NodeValue& v) {
  if (v.is_pole()) return "pole";
  return complex_json(v.value());
}

Json params_json(const CurveParams& p, const Lattice& lat, const RadicalCatalog& cat) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["beta"] = p.beta;
  j["alpha"] = p.alpha;
  j["d"] = p.d;
  j["delta"] = p.delta;
  j["roots"] = {p.e1, p.e2, p.e3};
  j["g2"] = p.g2;
  j["g3"] = p.g3;
  j["discriminant_sqrt"] = p.discriminant_sqrt;
  j["omega1"] = lat.omega1;
  j["omega2_im"] = lat.omega2_im;
  Json constants = Json::array();
  for (const auto& c : catalog_entries(cat)) {
    Json e;
    e["name"] = c.name;
    e["re"] = c.value.real();
    e["im"] = c.value.imag();
    constants.push_back(std::move(e));
  }
  j["constants"] = std::move(constants);
  j["near_singular"] = cat.near_singular;
  return j;
}

Json grid_json(double beta, const ClosedFormTable& table) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["beta"] = beta;
  Json entries = Json::array();
  for (int n = 0; n < ClosedFormTable::kSize; ++n) {
    for (int m = 0; m < ClosedFormTable::kSize; ++m) {
      const TableEntry& e = table.at(m, n);
      Json row;
      row["m"] = m;
      row["n"] = n;
      row["symbol"] = e.symbol;
      if (e.value.is_pole()) {
        row["value"] = "pole";
      } else {
        row["re"] = e.value.value().real();
        row["im"] = e.value.value().imag();
      }
      entries.push_back(std::move(row));
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string grid_csv(const ClosedFormTable& table) {
  std::string out = "m,n,symbol,re,im\n";
  for (int n = 0; n < ClosedFormTable::kSize; ++n) {
    for (int m = 0; m < ClosedFormTable::kSize; ++m) {
      const TableEntry& e = table.at(m, n);
      out += std::to_string(m) + "," + std::to_string(n) + "," + e.symbol + ",";
      if (e.value.is_pole()) {
        out += "pole,pole\n";
      } else {
        out += csv_number(e.value.value().real()) + "," + csv_number(e.value.value().imag()) +
               "\n";
      }
    }
  }
  return out;
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["beta"] = r.beta;
  j["tolerance"] = r.tolerance;
  j["verdict"] = verdict_name(r.verdict);
  j["orientation_flipped"] = r.orientation_flipped;
  j["max_rel_err"] = real_or_null(r.max_rel_err());
  Json nodes = Json::array();
  for (const NodeCheck& c : r.per_node) {
    Json e;
    e["m"] = c.m;
    e["n"] = c.n;
    e["symbol"] = c.symbol;
    e["closed"] = node_value_json(c.closed);
    e["numeric"] = node_value_json(c.numeric);
    e["abs_err"] = real_or_null(c.abs_err);
    e["rel_err"] = real_or_null(c.rel_err);
    e["pass"] = c.pass;
    nodes.push_back(std::move(e));
  }
  j["per_node"] = std::move(nodes);
  Json props = Json::array();
  for (const PropertyResult& p : r.property_results) {
    Json e;
    e["name"] = p.name;
    e["pass"] = p.pass;
    e["detail"] = p.detail;
    props.push_back(std::move(e));
  }
  j["property_results"] = std::move(props);
  return j;
}

Json sweep_json(const std::vector<VerificationReport>& reports) {
  Json j;
  j["schema"] = kSchemaVersion;
  bool all = true;
  Json results = Json::array();
  for (const auto& r : reports) {
    all = all && r.verdict == Verdict::pass;
    Json e;
    e["beta"] = r.beta;
    e["verdict"] = verdict_name(r.verdict);
    e["max_rel_err"] = real_or_null(r.max_rel_err());
    Json failed = Json::array();
    for (const auto& p : r.property_results)
      if (!p.pass) failed.push_back(p.name);
    e["failed_properties"] = std::move(failed);
    results.push_back(std::move(e));
  }
  j["verdict"] = all ? "pass" : "fail";
  j["results"] = std::move(results);
  return j;
}

}  // namespace rbeta

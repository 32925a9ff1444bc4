#include "chdyn/report.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "chdyn/image_io.hpp"

namespace chdyn {

namespace {

// Minimal ordered JSON emitter: two-space indentation, keys in call order.
class JsonWriter {
 public:
  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(std::string_view k) {
    separate();
    out_ += quoted(k);
    out_ += ": ";
    pending_key_ = true;
    return *this;
  }

  JsonWriter& value(double x) {
    if (std::isfinite(x)) return raw(fmt::format("{:.17g}", x));
    return raw(quoted(std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf")));
  }
  JsonWriter& value(int x) { return raw(fmt::format("{}", x)); }
  JsonWriter& value(std::uint64_t x) { return raw(fmt::format("{}", x)); }
  JsonWriter& value(bool x) { return raw(x ? "true" : "false"); }
  JsonWriter& value(std::string_view s) { return raw(quoted(s)); }
  JsonWriter& value(const char* s) { return value(std::string_view{s}); }
  JsonWriter& null() { return raw("null"); }

  JsonWriter& value(Complex z) {
    begin_object();
    key("re").value(z.real());
    key("im").value(z.imag());
    return end_object();
  }

  JsonWriter& value(const ExtendedComplex& z) {
    if (z.is_infinite()) return value("infinity");
    return value(z.value());
  }

  std::string str() const { return out_ + "\n"; }

 private:
  static std::string quoted(std::string_view s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    q += '"';
    return q;
  }

  void separate() {
    if (pending_key_) {
      pending_key_ = false;
      return;
    }
    if (!first_.empty()) {
      if (!first_.back()) out_ += ',';
      first_.back() = false;
      out_ += '\n';
      out_.append(2 * first_.size(), ' ');
    }
  }

  JsonWriter& raw(std::string_view text) {
    separate();
    out_ += text;
    return *this;
  }

  JsonWriter& open(char bracket) {
    separate();
    out_ += bracket;
    first_.push_back(true);
    return *this;
  }

  JsonWriter& close(char bracket) {
    const bool empty = first_.back();
    first_.pop_back();
    if (!empty) {
      out_ += '\n';
      out_.append(2 * first_.size(), ' ');
    }
    out_ += bracket;
    return *this;
  }

  std::string out_;
  std::vector<bool> first_;
  bool pending_key_ = false;
};

}  // namespace

std::string to_json(const TrichotomyReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("kind").value("trichotomy");

  w.key("params").begin_object();
  w.key("family").value(to_string(report.family));
  if (report.family == Family::McMullen) {
    w.key("lambda").value(report.parameter);
    w.key("n").value(report.n);
    w.key("d").value(report.d);
  } else {
    w.key("a").value(report.parameter);
  }
  w.key("max_iter").value(report.max_iter);
  w.end_object();

  w.key("class").value(to_string(report.cls));
  w.key("m");
  if (report.m) {
    w.value(*report.m);
  } else {
    w.null();
  }

  w.key("events").begin_array();
  for (const OrbitEvent& e : report.evidence.events) {
    w.begin_object();
    w.key("index").value(e.index);
    w.key("kind").value(to_string(e.kind));
    if (e.index >= 0 && static_cast<std::size_t>(e.index) < report.evidence.points.size())
      w.key("point").value(report.evidence.points[static_cast<std::size_t>(e.index)]);
    w.end_object();
  }
  w.end_array();

  w.key("thresholds").begin_object();
  if (report.family == Family::McMullen) {
    w.key("escape_radius").value(report.thresholds.escape_radius);
    w.key("trap_door_radius").value(report.thresholds.trap_door_radius);
  } else {
    w.key("pole_threshold").value(report.thresholds.pole_threshold);
    w.key("root_radius").value(report.thresholds.root_radius);
  }
  w.key("boundary_adjacent").value(report.boundary_adjacent);
  w.key("truncated").value(report.evidence.truncated);
  w.end_object();

  w.key("engine_version").value(kEngineVersion);
  w.end_object();
  return w.str();
}

std::string to_json(const SpecialParamResult& result) {
  JsonWriter w;
  w.begin_object();
  w.key("kind").value("special-param");
  w.key("params").begin_object();
  w.key("target").value(to_string(result.kind));
  w.key("bracket").begin_array().value(result.bracket.lo()).value(result.bracket.hi()).end_array();
  w.end_object();
  w.key("value").value(result.value);
  w.key("residual").value(result.residual);
  w.key("events").begin_array();
  w.begin_object().key("index").value(result.iterations).key("kind").value("converged").end_object();
  w.end_array();
  w.key("thresholds").begin_object();
  w.key("tolerance").value(result.tolerance);
  w.key("min_bracket_width").value(1e-14);
  w.end_object();
  w.key("engine_version").value(kEngineVersion);
  w.end_object();
  return w.str();
}

std::string to_json(const LemmaCheckResult& result) {
  JsonWriter w;
  w.begin_object();
  w.key("kind").value("lemma-check");
  w.key("params").begin_object();
  w.key("lemma_id").value(result.lemma_id);
  w.key("a").value(result.parameter);
  w.key("samples").value(result.samples);
  w.key("seed").value(result.seed);
  w.end_object();
  w.key("class").value(result.passed ? "pass" : "fail");
  w.key("residual").value(result.worst_ratio);
  w.key("events").begin_array();
  if (result.witness) w.begin_object().key("kind").value("witness").key("point").value(*result.witness).end_object();
  w.end_array();
  w.key("thresholds").begin_object();
  w.key("bound").value(result.bound);
  w.key("worst_value").value(result.worst_value);
  for (const auto& [name, v] : result.details) w.key(name).value(v);
  w.end_object();
  w.key("engine_version").value(kEngineVersion);
  w.end_object();
  return w.str();
}

void write_report(const TrichotomyReport& report, const std::filesystem::path& path) {
  write_file(path, to_json(report));
}

void write_report(const SpecialParamResult& result, const std::filesystem::path& path) {
  write_file(path, to_json(result));
}

void write_report(const LemmaCheckResult& result, const std::filesystem::path& path) {
  write_file(path, to_json(result));
}

}  // namespace chdyn

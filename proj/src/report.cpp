#include "nonarch/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nonarch/annuli.hpp"
#include "nonarch/mero.hpp"
#include "nonarch/newton.hpp"

namespace nonarch {

namespace {

constexpr long kDefaultDepth = 32;

Json indices_json(const std::set<long>& s) { return Json(std::vector<long>(s.begin(), s.end())); }

Json terms_json(const LaurentSeries& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json::array({e, c.str()}));
  return out;
}

Json header(const JobFile& job, const std::string& command) {
  Json j;
  j["command"] = command;
  j["field"] = job.field->describe();
  return j;
}

const LaurentSeries& need_absolute(const JobFile& job, const std::string& command) {
  if (job.kind != SeriesKind::kAbsolute) {
    throw Error(ErrorCode::kInvalidArgument, command + " needs a series block over the base field");
  }
  return *job.absolute;
}

const LogRadiusWindow& need_window(const JobFile& job, const std::string& command) {
  if (!job.window) throw Error(ErrorCode::kInvalidArgument, command + " needs a window");
  return *job.window;
}

void attach_artifacts(JobReport& report, const LaurentSeries& f, const std::optional<LogRadiusWindow>& window) {
  if (f.is_zero()) return;
  report.svg = newton_svg(f);
  report.csv = newton_csv(f, window);
}

JobReport run_newton(const JobFile& job) {
  const LaurentSeries& f = need_absolute(job, "newton");
  const NewtonPolygon poly = newton_polygon(f);
  JobReport report;
  Json& j = report.body;
  j = header(job, "newton");
  j["status"] = "decided";
  Json points = Json::array();
  for (const auto& p : poly.points) points.push_back(Json::array({p.exponent, to_string(p.value)}));
  Json vertices = Json::array();
  for (const auto& p : poly.vertices) vertices.push_back(Json::array({p.exponent, to_string(p.value)}));
  Json slopes = Json::array();
  for (const auto& s : poly.slopes) slopes.push_back(to_string(s));
  Json breakpoints = Json::array();
  for (std::size_t k = poly.slopes.size(); k-- > 0;) {
    const auto idx = poly.segment_indices(k);
    breakpoints.push_back({{"w", to_string(-poly.slopes[k])}, {"indices", idx}});
  }
  j["points"] = points;
  j["vertices"] = vertices;
  j["slopes"] = slopes;
  j["breakpoints"] = breakpoints;
  if (job.window) {
    j["window"] = job.window->str();
    Json profile = Json::array();
    for (const auto& piece : minimizer_profile(f, *job.window)) {
      if (piece.index) {
        profile.push_back({{"window", piece.window.str()}, {"index", *piece.index}});
      } else {
        profile.push_back({{"tie", to_string(*piece.window.lo())}, {"indices", indices_json(piece.tie_indices)}});
      }
    }
    j["profile"] = profile;
  }
  attach_artifacts(report, f, job.window);
  return report;
}

Json witness_json(const DominanceResult& r) {
  if (const auto* c = std::get_if<DominanceCertificate>(&r)) {
    return {{"index", c->j}, {"gap", c->gap.str()}, {"uniform", c->uniform}};
  }
  if (const auto* t = std::get_if<TieWitness>(&r)) {
    return {{"w", to_string(t->w)}, {"indices", indices_json(t->indices)}};
  }
  const auto& n = std::get<NoDominance>(r);
  return {{"w", to_string(n.witness.w)},
          {"indices", indices_json(n.witness.indices)},
          {"left_index", n.left_index},
          {"right_index", n.right_index}};
}

JobReport run_unit(const JobFile& job) {
  const LaurentSeries& f = need_absolute(job, "unit");
  const LogRadiusWindow& window = need_window(job, "unit");
  const UnitTest test = is_unit(f, AnnulusDomain{window, *job.field});
  JobReport report;
  Json& j = report.body;
  j = header(job, "unit");
  j["window"] = window.str();
  j["status"] = "decided";
  j["unit"] = test.unit;
  j["witness"] = witness_json(test.witness);
  attach_artifacts(report, f, window);
  return report;
}

JobReport run_invert(const JobFile& job) {
  const LaurentSeries& f = need_absolute(job, "invert");
  const LogRadiusWindow& window = need_window(job, "invert");
  if (!job.prec) throw Error(ErrorCode::kInvalidArgument, "invert needs a precision (prec or --prec)");
  const LaurentSeries g = invert(f, AnnulusDomain{window, *job.field}, *job.prec, job.subwindow);
  JobReport report;
  Json& j = report.body;
  j = header(job, "invert");
  j["window"] = window.str();
  if (job.subwindow) j["subwindow"] = job.subwindow->str();
  j["prec"] = to_string(*job.prec);
  j["status"] = "decided";
  j["terms"] = terms_json(g);
  if (g.tail()) {
    j["tail"] = {{"floor", g.tail()->floor.str()}, {"domain", g.tail()->domain.str()}};
  } else {
    j["tail"] = nullptr;
  }
  attach_artifacts(report, f, window);
  return report;
}

StreamSeries job_stream(const JobFile& job) {
  if (job.stream) {
    const StreamRule& r = *job.stream;
    const LogRadiusWindow domain = job.domain.value_or(LogRadiusWindow::everything());
    StreamSeries s = r.kind == StreamRule::Kind::kGeometric
                         ? StreamSeries::geometric(*r.coef, *r.ratio, r.step, r.shift, domain)
                         : StreamSeries::gaussian(*r.base, r.sign, domain);
    return job.shape ? s.with_shape(*job.shape) : s;
  }
  StreamSeries s = StreamSeries::from_laurent(need_absolute(job, "pole"));
  if (job.domain) s = s.with_natural_domain(*job.domain);
  return job.shape ? s.with_shape(*job.shape) : s;
}

JobReport run_pole(const JobFile& job) {
  const long depth = job.depth.value_or(kDefaultDepth);
  const PoleReport result = pole_order(job_stream(job), depth);
  JobReport report;
  Json& j = report.body;
  j = header(job, "pole");
  j["depth"] = depth;
  if (const auto* m = std::get_if<Meromorphic>(&result)) {
    j["status"] = "decided";
    j["result"] = "meromorphic";
    j["lowest_exponent"] = m->lowest_exponent ? Json(*m->lowest_exponent) : Json(nullptr);
    j["pole_order"] = m->pole_order();
  } else if (const auto* e = std::get_if<Essential>(&result)) {
    j["status"] = "decided";
    j["result"] = "essential";
    j["declared"] = e->declared;
    j["scanned_negative_terms"] = e->scanned_negative_terms;
  } else {
    report.status = ReportStatus::kUndetermined;
    j["status"] = "undetermined";
    j["result"] = "undetermined";
  }
  return report;
}

JobReport run_discwise(const JobFile& job) {
  if (job.kind != SeriesKind::kRelative) {
    throw Error(ErrorCode::kInvalidArgument, "discwise needs vars and a series block");
  }
  const long depth = job.depth.value_or(kDefaultDepth);
  const DiscwiseResult result = discwise_meromorphy(*job.relative, GenericPoint{job.point}, depth);
  JobReport report;
  Json& j = report.body;
  j = header(job, "discwise");
  Json point = Json::array();
  for (const auto& c : job.point) point.push_back(c.str());
  j["point"] = point;
  j["depth"] = depth;
  if (const auto* ext = std::get_if<MeroExtension>(&result)) {
    j["status"] = "decided";
    j["pole_order"] = ext->pole_order;
    Json terms = Json::array();
    for (const auto& [e, b] : ext->regular_part.terms()) terms.push_back(Json::array({e, b.str(job.vars)}));
    j["regular_part"] = terms;
  } else {
    report.status = ReportStatus::kUndetermined;
    j["status"] = "undetermined";
  }
  return report;
}

JobReport run_descend(const JobFile& job) {
  if (job.kind != SeriesKind::kPolyradius) {
    throw Error(ErrorCode::kInvalidArgument, "descend needs aux and a series block");
  }
  const LaurentSeries f = descend_kr(*job.polyradius);
  JobReport report;
  Json& j = report.body;
  j = header(job, "descend");
  j["aux"] = job.aux;
  j["status"] = "decided";
  j["series"] = terms_json(f);
  return report;
}

/// q rounded toward -inf to two decimals, printed without exponent notation.
std::string decimal(const Rational& q) {
  const Integer hundredths = floor_of(q * 100);
  Integer whole = hundredths / 100;
  Integer frac = hundredths % 100;
  std::string sign;
  if (hundredths < 0) {
    sign = "-";
    const Integer m = -hundredths;
    whole = m / 100;
    frac = m % 100;
  }
  std::string f = frac.get_str();
  if (f.size() < 2) f = "0" + f;
  return sign + whole.get_str() + "." + f;
}

}  // namespace

JobReport run_job(const JobFile& job) {
  if (!job.command) throw Error(ErrorCode::kInvalidArgument, "job names no command");
  if (!job.field) throw Error(ErrorCode::kInvalidArgument, "job names no field");
  const std::string& c = *job.command;
  if (c == "newton") return run_newton(job);
  if (c == "unit") return run_unit(job);
  if (c == "invert") return run_invert(job);
  if (c == "pole") return run_pole(job);
  if (c == "discwise") return run_discwise(job);
  if (c == "descend") return run_descend(job);
  throw Error(ErrorCode::kInvalidArgument, "unknown command '" + c + "'");
}

Json error_report(const Error& e) {
  Json j;
  j["error"] = std::string(error_code_name(e.code()));
  j["message"] = e.what();
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    j["line"] = p->line();
    j["column"] = p->column();
  }
  if (const auto* g = dynamic_cast<const NonGenericPointError*>(&e)) j["exponent"] = g->exponent();
  if (const auto* a = dynamic_cast<const NontrivialAuxSupportError*>(&e)) {
    j["exponent"] = a->exponent();
    j["multi_index"] = a->multi_index();
  }
  return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

std::string newton_svg(const LaurentSeries& f) {
  const NewtonPolygon poly = newton_polygon(f);
  long emin = poly.points.front().exponent;
  long emax = poly.points.back().exponent;
  Rational vmin = poly.points.front().value;
  Rational vmax = vmin;
  for (const auto& p : poly.points) {
    vmin = std::min(vmin, p.value);
    vmax = std::max(vmax, p.value);
  }
  const Rational unit(40);
  const Rational margin(40);
  auto x = [&](long e) { return decimal(margin + unit * Rational(e - emin)); };
  auto y = [&](const Rational& v) { return decimal(margin + unit * (vmax - v)); };
  const std::string width = decimal(2 * margin + unit * Rational(emax - emin));
  const std::string height = decimal(2 * margin + unit * (vmax - vmin));

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  out << "  <title>Newton polygon: points (exponent, valuation) and lower hull</title>\n";
  out << "  <polyline fill=\"none\" stroke=\"black\" points=\"";
  for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
    if (k) out << " ";
    out << x(poly.vertices[k].exponent) << "," << y(poly.vertices[k].value);
  }
  out << "\"/>\n";
  std::set<long> hull;
  for (const auto& v : poly.vertices) hull.insert(v.exponent);
  for (const auto& p : poly.points) {
    const bool vertex = hull.count(p.exponent) > 0;
    out << "  <circle cx=\"" << x(p.exponent) << "\" cy=\"" << y(p.value) << "\" r=\"" << (vertex ? 4 : 3)
        << "\" fill=\"" << (vertex ? "black" : "gray") << "\"/>\n";
    if (vertex) {
      out << "  <text x=\"" << x(p.exponent) << "\" y=\"" << y(p.value) << "\" dy=\"-8\" font-size=\"10\">("
          << p.exponent << ", " << to_string(p.value) << ")</text>\n";
    }
  }
  for (std::size_t k = 0; k < poly.slopes.size(); ++k) {
    const auto& a = poly.vertices[k];
    const auto& b = poly.vertices[k + 1];
    const Rational mx = margin + unit * (Rational(a.exponent + b.exponent, 2) - Rational(emin));
    const Rational my = margin + unit * (vmax - (a.value + b.value) / 2);
    out << "  <text x=\"" << decimal(mx) << "\" y=\"" << decimal(my)
        << "\" dy=\"14\" font-size=\"10\" fill=\"blue\">tie at w = " << to_string(-poly.slopes[k])
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string newton_csv(const LaurentSeries& f, const std::optional<LogRadiusWindow>& window) {
  const NewtonPolygon poly = newton_polygon(f);
  std::vector<Rational> breaks;
  for (const auto& s : poly.slopes) breaks.push_back(-s);
  Rational lo = breaks.empty() ? Rational(-1) : *std::min_element(breaks.begin(), breaks.end()) - 1;
  Rational hi = breaks.empty() ? Rational(1) : *std::max_element(breaks.begin(), breaks.end()) + 1;
  if (window && window->lo()) lo = *window->lo();
  if (window && window->hi()) hi = *window->hi();
  if (window && window->lo() && !window->hi() && hi <= lo) hi = lo + 2;
  if (window && window->hi() && !window->lo() && lo >= hi) lo = hi - 2;

  std::set<Rational> samples;
  constexpr int kSteps = 20;
  for (int k = 0; k <= kSteps; ++k) samples.insert(lo + (hi - lo) * Rational(k, kSteps));
  for (const auto& b : breaks) {
    if (b >= lo && b <= hi) samples.insert(b);
  }
  std::ostringstream out;
  out << "w,trop_value,minimizers\n";
  for (const auto& w : samples) {
    if (window && !window->contains(w)) continue;
    const auto [value, at] = minimizers_at(f, w);
    out << to_string(w) << "," << value.str() << ",";
    bool first = true;
    for (long i : at) {
      if (!first) out << ";";
      first = false;
      out << i;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace nonarch

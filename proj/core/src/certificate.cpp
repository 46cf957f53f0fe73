#include "braid3/certificate.hpp"

#include <json.hpp>

#include <algorithm>

#include "braid3/version.hpp"

namespace braid3 {

namespace {

using Json = nlohmann::ordered_json;

Json json_ratio(const Rational& r) { return to_ratio_string(r); }

Json json_input(std::string_view word, Alphabet alphabet,
                const std::optional<std::string>& label) {
  Json in;
  in["word"] = std::string(word);
  in["alphabet"] = alphabet == Alphabet::Artin ? "artin" : "band";
  in["label"] = label ? Json(*label) : Json(nullptr);
  return in;
}

Json to_json_object(const Certificate& c) {
  Json j;
  j["tool"] = std::string(kToolName);
  j["version"] = std::string(kVersion);
  j["input"] = json_input(c.input_word, c.alphabet, c.label);
  j["is_knot"] = c.knot;

  Json band;
  band["word"] = c.band_word;
  band["length"] = c.band_length;
  band["minimized_word"] = render(c.minimization.best_word);
  band["minimized_length"] = c.minimization.length;
  band["certified_minimal"] = c.minimization.certified_minimal;
  band["states_explored"] = c.minimization.states_explored;
  band["budget_exhausted"] = c.minimization.budget_exhausted;
  j["band"] = band;

  Json genus;
  genus["lower"] = to_int64_checked(c.genus.lower);
  genus["upper"] = json_ratio(c.genus.upper);
  genus["certified"] = c.genus.certified;
  j["genus"] = genus;

  j["crossing_bound"] = c.crossing_bound_value;

  Json alex;
  alex["delta"] = c.alexander.delta.str();
  alex["degree"] = c.alexander.genus_lower;
  alex["a2"] = to_int64_checked(c.alexander.a2);
  alex["determinant"] = to_int64_checked(c.alexander.determinant);
  j["alexander"] = alex;

  Json th;
  th["delta_span"] =
      c.thickness.delta_span ? Json(to_ratio_string(*c.thickness.delta_span))
                             : Json(nullptr);
  th["kauffman_states"] = c.thickness.state_count
                              ? Json(*c.thickness.state_count)
                              : Json(nullptr);
  th["state_cap_exceeded"] = c.thickness.state_cap_exceeded;
  th["lemma_bound"] = json_ratio(c.thickness.lemma_bound);
  th["upper"] = json_ratio(c.thickness.upper);
  th["active"] = c.thickness.active;
  j["thickness"] = th;

  if (c.report) {
    const auto& r = *c.report;
    Json verdict;
    verdict["result"] = to_string(r.result);
    verdict["reason"] = r.reason ? Json(to_string(*r.reason)) : Json(nullptr);
    Json slopes = Json::array();
    for (const auto& pair : r.residual) {
      slopes.push_back(Json::array({pair.positive.str(), pair.negated().str()}));
    }
    verdict["residual_slopes"] = slopes;
    verdict["ratio"] = r.ratio ? Json(to_ratio_string(*r.ratio)) : Json(nullptr);
    verdict["q_max"] =
        r.q_max ? Json(to_int64_checked(*r.q_max)) : Json(nullptr);
    verdict["notes"] = r.notes;
    j["verdict"] = verdict;
  }

  Json budget;
  budget["search_max_states"] = c.options.search_budget.max_states_explored;
  budget["search_max_depth"] = c.options.search_budget.max_depth;
  budget["kauffman_state_cap"] = c.options.max_kauffman_states;
  j["budget"] = budget;
  return j;
}

}  // namespace

std::string Certificate::to_json() const { return to_json_object(*this).dump(2); }

std::string Certificate::to_json_line() const { return to_json_object(*this).dump(); }

std::string Certificate::to_text() const {
  std::string out;
  const auto line = [&out](const std::string& k, const std::string& v) {
    out += k;
    out.append(k.size() < 18 ? 18 - k.size() : 1, ' ');
    out += v;
    out += '\n';
  };
  line("tool:", std::string(kToolName) + " " + std::string(kVersion));
  line("word:", input_word + (alphabet == Alphabet::Artin ? "  (artin)" : "  (band)"));
  if (label) line("label:", *label);
  line("band word:", band_word + "  (length " + std::to_string(band_length) + ")");
  line("minimized band:",
       render(minimization.best_word) + "  (length " +
           std::to_string(minimization.length) +
           (minimization.certified_minimal ? ", certified minimal" : "") + ", " +
           std::to_string(minimization.states_explored) + " states explored)");
  line("genus bounds:", "[" + genus.lower.str() + ", " + to_ratio_string(genus.upper) +
                            "]" + (genus.certified ? "  (certified)" : ""));
  line("crossing bound:", std::to_string(crossing_bound_value));
  line("alexander:", alexander.delta.str());
  line("a2:", alexander.a2.str());
  line("determinant:", alexander.determinant.str());
  if (thickness.state_count) {
    line("kauffman states:", std::to_string(*thickness.state_count));
    line("delta span:", to_ratio_string(*thickness.delta_span));
  } else {
    line("kauffman states:", "skipped (state cap exceeded)");
  }
  line("thickness upper:", to_ratio_string(thickness.upper) + "  (" + thickness.active +
                               "; lemma bound " + to_ratio_string(thickness.lemma_bound) +
                               ")");
  if (report) {
    std::string v = to_string(report->result);
    if (report->reason) v += std::string("  (") + to_string(*report->reason) + ")";
    line("verdict:", v);
    if (!report->residual.empty()) {
      std::string slopes;
      for (const auto& pair : report->residual) {
        if (!slopes.empty()) slopes += ", ";
        slopes += "{" + pair.positive.str() + ", " + pair.negated().str() + "}";
      }
      line("residual slopes:", slopes);
    }
    if (report->ratio) line("slope ratio:", to_ratio_string(*report->ratio));
    if (report->q_max) line("q_max:", report->q_max->str());
    for (const auto& n : report->notes) line("note:", n);
  }
  return out;
}

Certificate analyze(const AnyWord& word, const PipelineOptions& opts) {
  Certificate cert;
  cert.options = opts;
  cert.alphabet = alphabet_of(word);
  cert.input_word = render(word);

  if (!is_knot(word)) {
    throw Error("not_a_knot", "closure has " +
                                  std::to_string(component_count(word)) +
                                  " components");
  }
  cert.knot = true;

  const BraidWord artin = cert.alphabet == Alphabet::Artin
                              ? std::get<BraidWord>(word)
                              : band_to_artin(std::get<BandWord>(word));
  const BandWord band = cert.alphabet == Alphabet::Band
                            ? std::get<BandWord>(word)
                            : artin_to_band(std::get<BraidWord>(word));
  cert.band_word = render(band);
  cert.band_length = band.size();

  cert.alexander = alexander_poly(artin);
  cert.minimization = minimize_band_length(
      band, opts.search_budget, Rational(BigInt(cert.alexander.genus_lower)));

  cert.genus.lower = cert.alexander.genus_lower;
  cert.genus.upper = cert.minimization.genus_upper;
  cert.genus.certified = Rational(cert.genus.lower) == cert.genus.upper;
  cert.genus.validate();

  cert.crossing_bound_value = crossing_bound(band);

  // Thickness: the sharper of the diagram delta-span bound and the genus
  // bound (5/3)(g_u + 1); both are sound.
  cert.thickness.lemma_bound = thickness_bound_from_genus(cert.genus.upper);
  const Diagram diagram = build_diagram(artin);
  const auto span =
      delta_span(diagram, static_cast<std::size_t>(opts.max_kauffman_states));
  if (span) {
    cert.thickness.delta_span = span->thickness_upper;
    cert.thickness.state_count = static_cast<std::int64_t>(span->state_count);
    if (span->thickness_upper <= cert.thickness.lemma_bound) {
      cert.thickness.upper = span->thickness_upper;
      cert.thickness.active = "delta_span";
    } else {
      cert.thickness.upper = cert.thickness.lemma_bound;
      cert.thickness.active = "genus_lemma";
    }
  } else {
    cert.thickness.state_cap_exceeded = true;
    cert.thickness.upper = cert.thickness.lemma_bound;
    cert.thickness.active = "genus_lemma";
  }

  if (opts.with_verdict) {
    ObstructionReport report =
        verdict(cert.alexander.a2, cert.genus, cert.thickness.upper);
    if (cert.thickness.state_cap_exceeded) {
      report.notes.insert(report.notes.begin(),
                          "Kauffman state cap exceeded; the thickness bound "
                          "fell back to the genus bound.");
    }
    if (cert.genus.upper == 0) {
      report.notes.insert(report.notes.begin(),
                          "trivial knot outside theorem scope");
    }
    cert.report = std::move(report);
  }
  return cert;
}

Certificate analyze_text(std::string_view text, const PipelineOptions& opts) {
  return analyze(parse_word(text), opts);
}

std::string error_json(const Error& e, std::string_view word_text,
                       const std::optional<std::string>& label) {
  Json j;
  j["tool"] = std::string(kToolName);
  j["version"] = std::string(kVersion);
  j["input"] = Json::object();
  j["input"]["word"] = std::string(word_text);
  j["input"]["label"] = label ? Json(*label) : Json(nullptr);
  Json err;
  err["code"] = e.code();
  err["message"] = e.what();
  err["position"] = e.position() ? Json(*e.position()) : Json(nullptr);
  j["error"] = err;
  return j.dump();
}

}  // namespace braid3

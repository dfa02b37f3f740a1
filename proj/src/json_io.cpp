#include "levelrank/json_io.hpp"

#include "levelrank/errors.hpp"

namespace levelrank {

namespace {

template <typename F>
auto reparse(const char* what, F&& f) {
  try {
    return f();
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const Partition& p) { j = p.parts(); }

void from_json(const json& j, Partition& p) {
  p = reparse("partition", [&] { return Partition(j.get<std::vector<int>>()); });
}

void to_json(json& j, const Multipartition& mp) { j = mp.components(); }

void from_json(const json& j, Multipartition& mp) {
  mp = reparse("multipartition", [&] { return Multipartition(j.get<std::vector<Partition>>()); });
}

void to_json(json& j, const ChargedMultipartition& cm) {
  j = json{{"components", cm.components}, {"charges", cm.charges}};
}

void from_json(const json& j, ChargedMultipartition& cm) {
  cm = reparse("charged multipartition", [&] {
    return ChargedMultipartition(j.at("components").get<Multipartition>(),
                                 j.at("charges").get<std::vector<int>>());
  });
}

void to_json(json& j, const AffinePermutation& w) {
  j = json{{"shifts", w.shifts()}, {"perm", w.perm()}};
}

void from_json(const json& j, AffinePermutation& w) {
  w = reparse("affine permutation", [&] {
    return AffinePermutation(j.at("shifts").get<std::vector<int>>(), j.at("perm").get<std::vector<int>>());
  });
}

void to_json(json& j, const ResidueMultiset& r) { j = json{{"modulus", r.modulus}, {"counts", r.counts}}; }

void from_json(const json& j, ResidueMultiset& r) {
  r = reparse("residues", [&] {
    return ResidueMultiset{j.at("modulus").get<int>(), j.at("counts").get<std::vector<int>>()};
  });
}

void to_json(json& j, const BlockKey& k) {
  j = json{{"size", k.size},
           {"level", k.level},
           {"modulus", k.modulus},
           {"charge_mod", k.charge_mod},
           {"residues", k.residues}};
}

void from_json(const json& j, BlockKey& k) {
  k = reparse("block key", [&] {
    return BlockKey{j.at("size").get<int>(), j.at("level").get<int>(), j.at("modulus").get<int>(),
                    j.at("charge_mod").get<std::vector<int>>(), j.at("residues").get<ResidueMultiset>()};
  });
}

void to_json(json& j, const UglovDatum& d) {
  j = json{{"size", d.size}, {"charge", d.charge}, {"block", d.block}};
}

void from_json(const json& j, UglovDatum& d) {
  d = reparse("uglov datum", [&] {
    return UglovDatum{j.at("size").get<int>(), j.at("charge").get<std::vector<int>>(),
                      j.at("block").get<BlockKey>()};
  });
}

void to_json(json& j, const UglovInstance& inst) {
  j = json{{"source", inst.source},
           {"source_members", inst.source_members},
           {"image", inst.image ? json(*inst.image) : json(nullptr)},
           {"image_members", inst.image_members},
           {"single_valued", inst.single_valued},
           {"onto", inst.onto},
           {"round_trip", inst.round_trip},
           {"status", inst.pass ? "PASS" : "FAIL"},
           {"message", inst.message}};
}

void from_json(const json& j, UglovInstance& inst) {
  inst = reparse("uglov instance", [&] {
    UglovInstance out;
    out.source = j.at("source").get<UglovDatum>();
    out.source_members = j.at("source_members").get<std::size_t>();
    out.image = optional_field<UglovDatum>(j, "image");
    out.image_members = j.at("image_members").get<std::size_t>();
    out.single_valued = j.at("single_valued").get<bool>();
    out.onto = j.at("onto").get<bool>();
    out.round_trip = j.at("round_trip").get<bool>();
    out.pass = j.at("status").get<std::string>() == "PASS";
    out.message = j.at("message").get<std::string>();
    return out;
  });
}

void to_json(json& j, const SideReport& side) {
  j = json{{"level", side.level},
           {"modulus", side.modulus},
           {"b", side.b},
           {"effective_charge", side.effective},
           {"images", side.images},
           {"block", side.block ? json(*side.block) : json(nullptr)},
           {"block_size", side.block_size},
           {"single_block", side.single_block},
           {"twisted_charge", side.twisted},
           {"congruence_componentwise", side.congruence_componentwise},
           {"congruence_multiset", side.congruence_multiset}};
}

void from_json(const json& j, SideReport& side) {
  side = reparse("side report", [&] {
    SideReport out;
    out.level = j.at("level").get<int>();
    out.modulus = j.at("modulus").get<int>();
    out.b = j.at("b").get<std::vector<int>>();
    out.effective = j.at("effective_charge").get<std::vector<int>>();
    out.images = j.at("images").get<std::vector<ChargedMultipartition>>();
    out.block = optional_field<BlockKey>(j, "block");
    out.block_size = j.at("block_size").get<std::size_t>();
    out.single_block = j.at("single_block").get<bool>();
    out.twisted = j.at("twisted_charge").get<std::vector<int>>();
    out.congruence_componentwise = j.at("congruence_componentwise").get<bool>();
    out.congruence_multiset = j.at("congruence_multiset").get<bool>();
    return out;
  });
}

std::string witness_source_name(WitnessSource source) {
  switch (source) {
    case WitnessSource::kNone: return "none";
    case WitnessSource::kSupplied: return "supplied";
    case WitnessSource::kSearched: return "searched";
    case WitnessSource::kSearchExhausted: return "search-exhausted";
  }
  return "none";
}

WitnessSource witness_source_from_name(const std::string& name) {
  for (auto s : {WitnessSource::kNone, WitnessSource::kSupplied, WitnessSource::kSearched,
                 WitnessSource::kSearchExhausted}) {
    if (witness_source_name(s) == name) return s;
  }
  throw ParseError("unknown witness source '" + name + "'");
}

void to_json(json& j, const DualityReport& r) {
  j = json{{"n", r.n},
           {"l", r.l},
           {"lambda", r.lambda},
           {"m", r.m},
           {"mu", r.mu},
           {"shift_bound", r.shift_bound},
           {"intersection", r.intersection},
           {"left", r.left},
           {"right", r.right},
           {"w_l", r.w_l ? json(*r.w_l) : json(nullptr)},
           {"w_m", r.w_m ? json(*r.w_m) : json(nullptr)},
           {"witness_source", witness_source_name(r.witness_source)},
           {"diagram_ok", r.diagram_ok},
           {"single_block_ok", r.single_block_ok},
           {"congruence_componentwise", r.congruence_componentwise},
           {"congruence_multiset", r.congruence_multiset},
           {"pass", r.pass()},
           {"elapsed_us", r.elapsed_us}};
}

void from_json(const json& j, DualityReport& r) {
  r = reparse("duality report", [&] {
    DualityReport out;
    out.n = j.at("n").get<int>();
    out.l = j.at("l").get<int>();
    out.lambda = j.at("lambda").get<Partition>();
    out.m = j.at("m").get<int>();
    out.mu = j.at("mu").get<Partition>();
    out.shift_bound = j.at("shift_bound").get<int>();
    out.intersection = j.at("intersection").get<std::vector<Partition>>();
    out.left = j.at("left").get<SideReport>();
    out.right = j.at("right").get<SideReport>();
    out.w_l = optional_field<AffinePermutation>(j, "w_l");
    out.w_m = optional_field<AffinePermutation>(j, "w_m");
    out.witness_source = witness_source_from_name(j.at("witness_source").get<std::string>());
    out.diagram_ok = j.at("diagram_ok").get<bool>();
    out.single_block_ok = j.at("single_block_ok").get<bool>();
    out.congruence_componentwise = j.at("congruence_componentwise").get<bool>();
    out.congruence_multiset = j.at("congruence_multiset").get<bool>();
    out.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
    return out;
  });
}

json uglov_summary(const UglovReport& report) {
  std::size_t failed = 0;
  for (const auto& inst : report.instances) failed += inst.pass ? 0 : 1;
  return json{{"summary", "uglov"},
              {"l", report.l},
              {"m", report.m},
              {"k_max", report.k_max},
              {"window", report.window},
              {"instances", report.instances.size()},
              {"failed", failed},
              {"injective", report.injective},
              {"status", report.pass ? "PASS" : "FAIL"},
              {"elapsed_us", report.elapsed_us}};
}

}  // namespace levelrank

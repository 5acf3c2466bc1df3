#include "cyclocover/serialize.hpp"

namespace cyclocover {

namespace {

constexpr const char* kSchema = R"json({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "cyclocover output record",
  "type": "object",
  "required": ["schema_version", "command", "inputs", "result", "checks"],
  "additionalProperties": false,
  "properties": {
    "schema_version": {"const": "1.0"},
    "command": {"enum": ["analyze", "certify", "enumerate", "sweep", "shimura", "oracle"]},
    "inputs": {"type": "object"},
    "result": {"type": "object"},
    "checks": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["name", "passed", "details"],
        "properties": {
          "name": {"type": "string"},
          "passed": {"type": "boolean"},
          "details": {"type": "string"}
        }
      }
    }
  },
  "$defs": {
    "fraction": {"type": "string", "pattern": "^-?[0-9]+/[1-9][0-9]*$"},
    "signature": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
    "family": {
      "type": "object",
      "required": ["n", "m", "nw"],
      "properties": {
        "n": {"type": "integer", "minimum": 2},
        "m": {"type": "array", "items": {"type": "integer"}, "minItems": 4, "maxItems": 4},
        "nw": {"type": "array", "items": {"type": "integer"}, "minItems": 3, "maxItems": 3}
      }
    },
    "eigenspace": {
      "type": "object",
      "required": ["j", "degenerate"],
      "properties": {
        "j": {"type": "integer"},
        "degenerate": {"type": "boolean"},
        "sigma": {"type": "integer"},
        "dim_h10": {"type": "integer"},
        "dim_h01": {"type": "integer"},
        "signature": {"$ref": "#/$defs/signature"},
        "split_class": {"enum": ["ZERO", "AMPLE_CANDIDATE", "FLAT"]}
      }
    },
    "verdict": {
      "type": "object",
      "required": ["kind"],
      "properties": {
        "kind": {"enum": ["FINITE", "INFINITE", "INCONCLUSIVE"]},
        "order": {"type": ["integer", "null"]},
        "witness_word": {"type": ["string", "null"]},
        "witness_unit": {"type": ["integer", "null"]},
        "witness_sigma": {"type": ["integer", "null"]},
        "cap": {"type": "integer"},
        "explored": {"type": "integer"},
        "max_word_len": {"type": "integer"}
      }
    },
    "invariants": {
      "type": "object",
      "required": ["g", "b", "e", "K2", "chi", "slope", "slope_decimal", "deg_V", "mu", "ball_quotient"],
      "properties": {
        "slope": {"$ref": "#/$defs/fraction"},
        "slope_decimal": {"type": "string", "pattern": "^-?[0-9]+\\.[0-9]{6}$"}
      }
    },
    "splitting": {
      "type": "object",
      "required": ["entries", "rank_V", "rank_flat", "rank_ample_candidate", "deg_V", "rank_Q_bounds"]
    },
    "certificate": {
      "type": "object",
      "required": ["family", "verdict", "reason", "admissible", "smooth", "invariants", "splitting",
                   "irreducible_all", "infinite_witness", "scope"],
      "properties": {
        "family": {"$ref": "#/$defs/family"},
        "verdict": {"enum": ["COUNTEREXAMPLE", "NOT_CERTIFIED"]},
        "reason": {"type": ["string", "null"]},
        "invariants": {"oneOf": [{"$ref": "#/$defs/invariants"}, {"type": "null"}]},
        "splitting": {"oneOf": [{"$ref": "#/$defs/splitting"}, {"type": "null"}]},
        "infinite_witness": {
          "type": ["object", "null"],
          "properties": {
            "j_star": {"type": "integer"},
            "unit_h": {"type": "integer"},
            "sigma": {"type": "integer"},
            "valid": {"type": "boolean"}
          }
        },
        "scope": {"type": "string"}
      }
    },
    "sweep_summary": {
      "type": "object",
      "required": ["instances", "agreements", "disagreements", "inconclusive", "details"]
    },
    "shimura": {
      "type": "object",
      "required": ["family", "count", "candidate", "pairs"]
    }
  }
})json";

}  // namespace

const Json& schema_document() {
  static const Json doc = Json::parse(kSchema);
  return doc;
}

}  // namespace cyclocover

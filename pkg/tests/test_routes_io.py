import json
import math

import numpy as np
import pytest

from umbilic import (
    RouteParseError,
    Transversal,
    builtin_route,
    document_to_route,
    dumps_document,
    load_route,
    loads_route,
    route_to_document,
    validate_document,
)


def geodesic_doc(**extra):
    doc = {
        "transversal": {"kind": "geodesic"},
        "samples": [{"t": 0.0, "h": 0.0}, {"t": 1.0, "h": 0.1}],
    }
    doc.update(extra)
    return doc


class TestValidateDocument:
    def test_minimal_samples_document(self):
        out = validate_document(geodesic_doc())
        assert out["transversal"] == {"kind": "geodesic"}
        assert out["samples"] == [{"t": 0.0, "h": 0.0}, {"t": 1.0, "h": 0.1}]

    def test_closed_form_document(self):
        out = validate_document(
            {
                "transversal": {"kind": "hypercycle", "phi": 0.8},
                "closed_form": {"name": "constant", "params": {"c": 0.3}},
                "window": [-2, 2],
                "n": 41,
            }
        )
        assert out["closed_form"] == {"name": "constant", "params": {"c": 0.3}}
        assert out["window"] == [-2.0, 2.0]
        assert out["n"] == 41

    def test_not_an_object(self):
        with pytest.raises(RouteParseError, match="must be an object"):
            validate_document([1, 2, 3])

    def test_unknown_root_field(self):
        with pytest.raises(RouteParseError) as exc:
            validate_document(geodesic_doc(color="red"))
        assert exc.value.path == "color"

    def test_missing_transversal(self):
        with pytest.raises(RouteParseError) as exc:
            validate_document({"samples": [{"t": 0.0, "h": 0.0}]})
        assert exc.value.path == "transversal"

    def test_both_forms_rejected(self):
        doc = geodesic_doc(closed_form={"name": "pencil"})
        with pytest.raises(RouteParseError, match="exactly one"):
            validate_document(doc)

    def test_neither_form_rejected(self):
        with pytest.raises(RouteParseError, match="exactly one"):
            validate_document({"transversal": {"kind": "geodesic"}})

    def test_window_only_with_closed_form(self):
        with pytest.raises(RouteParseError) as exc:
            validate_document(geodesic_doc(window=[-1, 1]))
        assert exc.value.path == "window"

    def test_n_only_with_closed_form(self):
        with pytest.raises(RouteParseError) as exc:
            validate_document(geodesic_doc(n=10))
        assert exc.value.path == "n"


class TestTransversalStanza:
    def test_bad_kind(self):
        with pytest.raises(RouteParseError) as exc:
            validate_document(geodesic_doc(transversal={"kind": "circle"}))
        assert exc.value.path == "transversal.kind"

    def test_hypercycle_needs_phi(self):
        with pytest.raises(RouteParseError) as exc:
            validate_document(geodesic_doc(transversal={"kind": "hypercycle"}))
        assert exc.value.path == "transversal.phi"

    def test_phi_range(self):
        for phi in (0.0, math.pi / 2, -1.0):
            with pytest.raises(RouteParseError, match="phi"):
                validate_document(
                    geodesic_doc(transversal={"kind": "hypercycle", "phi": phi})
                )

    def test_horocycle_needs_positive_height(self):
        with pytest.raises(RouteParseError) as exc:
            validate_document(geodesic_doc(transversal={"kind": "horocycle"}))
        assert exc.value.path == "transversal.height"
        with pytest.raises(RouteParseError):
            validate_document(
                geodesic_doc(transversal={"kind": "horocycle", "height": 0.0})
            )

    def test_cross_kind_fields_rejected(self):
        with pytest.raises(RouteParseError) as exc:
            validate_document(geodesic_doc(transversal={"kind": "geodesic", "phi": 0.5}))
        assert exc.value.path == "transversal.phi"
        with pytest.raises(RouteParseError):
            validate_document(
                geodesic_doc(
                    transversal={"kind": "hypercycle", "phi": 0.5, "height": 1.0}
                )
            )


class TestSamplesStanza:
    def test_field_path_in_message(self):
        doc = geodesic_doc(
            samples=[{"t": 0.0, "h": 0.0}, {"t": 1.0, "h": "x"}]
        )
        with pytest.raises(RouteParseError) as exc:
            validate_document(doc)
        assert exc.value.path == "samples[1].h"
        assert "samples[1].h" in str(exc.value)

    def test_bool_is_not_a_number(self):
        doc = geodesic_doc(samples=[{"t": 0.0, "h": True}])
        with pytest.raises(RouteParseError) as exc:
            validate_document(doc)
        assert exc.value.path == "samples[0].h"

    def test_nonfinite_rejected(self):
        doc = geodesic_doc(samples=[{"t": 0.0, "h": math.inf}])
        with pytest.raises(RouteParseError, match="finite"):
            validate_document(doc)

    def test_missing_field(self):
        doc = geodesic_doc(samples=[{"t": 0.0}])
        with pytest.raises(RouteParseError) as exc:
            validate_document(doc)
        assert exc.value.path == "samples[0].h"

    def test_unknown_sample_field(self):
        doc = geodesic_doc(samples=[{"t": 0.0, "h": 0.0, "k": 1.0}])
        with pytest.raises(RouteParseError) as exc:
            validate_document(doc)
        assert exc.value.path == "samples[0].k"

    def test_empty_samples(self):
        with pytest.raises(RouteParseError, match="nonempty"):
            validate_document(geodesic_doc(samples=[]))

    def test_increasing_t_enforced(self):
        doc = geodesic_doc(
            samples=[{"t": 0.0, "h": 0.0}, {"t": 0.0, "h": 0.1}]
        )
        with pytest.raises(RouteParseError) as exc:
            validate_document(doc)
        assert exc.value.path == "samples[1].t"

    def test_dh_all_or_none(self):
        doc = geodesic_doc(
            samples=[{"t": 0.0, "h": 0.0, "dh": -1.0}, {"t": 1.0, "h": 0.1}]
        )
        with pytest.raises(RouteParseError, match="every sample or on none"):
            validate_document(doc)

    def test_tol_must_be_positive(self):
        with pytest.raises(RouteParseError) as exc:
            validate_document(geodesic_doc(tol=0.0))
        assert exc.value.path == "tol"


class TestClosedFormStanza:
    def test_unknown_family(self):
        doc = {
            "transversal": {"kind": "geodesic"},
            "closed_form": {"name": "spiral"},
        }
        with pytest.raises(RouteParseError) as exc:
            validate_document(doc)
        assert exc.value.path == "closed_form.name"

    def test_unknown_param(self):
        doc = {
            "transversal": {"kind": "geodesic"},
            "closed_form": {"name": "constant", "params": {"c": 0.1, "z": 2}},
        }
        with pytest.raises(RouteParseError) as exc:
            validate_document(doc)
        assert exc.value.path == "closed_form.params.z"

    def test_bad_window(self):
        base = {
            "transversal": {"kind": "geodesic"},
            "closed_form": {"name": "pencil"},
        }
        with pytest.raises(RouteParseError):
            validate_document({**base, "window": [0.0]})
        with pytest.raises(RouteParseError):
            validate_document({**base, "window": [1.0, -1.0]})

    def test_bad_n(self):
        base = {
            "transversal": {"kind": "geodesic"},
            "closed_form": {"name": "pencil"},
        }
        with pytest.raises(RouteParseError):
            validate_document({**base, "n": 1})
        with pytest.raises(RouteParseError):
            validate_document({**base, "n": 2.5})
        with pytest.raises(RouteParseError):
            validate_document({**base, "n": True})


class TestRoundTrips:
    def test_closed_form_expands_like_builtin(self):
        doc = validate_document(
            {
                "transversal": {"kind": "geodesic"},
                "closed_form": {"name": "pencil"},
                "window": [-2, 2],
                "n": 41,
            }
        )
        route = document_to_route(doc)
        direct = builtin_route("pencil", window=(-2, 2), n=41)
        assert np.array_equal(route.t, direct.t)
        assert np.array_equal(route.h, direct.h)
        assert np.array_equal(route.dh, direct.dh)

    def test_samples_round_trip(self):
        route = builtin_route("constant", transversal=Transversal.hypercycle(0.8), c=0.2, n=11)
        doc = route_to_document(route)
        back = document_to_route(validate_document(doc))
        assert np.array_equal(back.t, route.t)
        assert np.array_equal(back.h, route.h)
        assert np.array_equal(back.dh, route.dh)
        assert back.tol == route.tol
        assert back.transversal == route.transversal

    def test_serialization_idempotent(self):
        route = builtin_route("pencil", n=7)
        text = dumps_document(route_to_document(route))
        doc = validate_document(json.loads(text))
        assert dumps_document(doc) == text
        assert text.endswith("\n")

    def test_tol_override_reaches_the_route(self):
        route = loads_route(json.dumps(geodesic_doc(tol=0.5)))
        assert route.tol == 0.5

    def test_default_tol(self):
        route = loads_route(json.dumps(geodesic_doc()))
        assert route.tol == 1e-9

    def test_dh_carries_through(self):
        doc = geodesic_doc(
            samples=[
                {"t": 0.0, "h": 0.0, "dh": -1.0},
                {"t": 1.0, "h": -0.5, "dh": -0.75},
            ]
        )
        route = loads_route(json.dumps(doc))
        assert route.dh == pytest.approx([-1.0, -0.75])

    def test_bad_json_text(self):
        with pytest.raises(RouteParseError, match="JSON"):
            loads_route("{not json")

    def test_load_from_file(self, tmp_path):
        p = tmp_path / "route.json"
        p.write_text(json.dumps(geodesic_doc()), encoding="utf-8")
        route = load_route(str(p))
        assert route.n == 2

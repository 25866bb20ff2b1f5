"""Smoke test for the pyreskit extension module."""

import json

import pyreskit


def main():
    anthracene = pyreskit.PlaneGraph.generate("polyacene", ["3"])
    value, witness = anthracene.fries_number()
    assert value == 2, value
    assert len(witness) == anthracene.vertex_count // 2

    r = anthracene.resonance_graph()
    assert (r.vertex_count, r.edge_count) == (4, 3)
    assert r.daisy() is None
    assert "down-set closure" in r.not_daisy_reason()

    fib = pyreskit.PlaneGraph.generate("fibonaccene", ["5"])
    rf = fib.resonance_graph()
    assert rf.vertex_count == 13
    cert = rf.daisy()
    assert cert["idim"] == 5, cert
    assert rf.is_median()
    assert fib.is_peripherally_2_colorable()

    back = pyreskit.PlaneGraph.from_json(fib.to_json())
    assert back.to_json() == fib.to_json()
    assert json.loads(fib.to_json())["format_version"] == pyreskit.FORMAT_VERSION

    bridged = pyreskit.PlaneGraph.generate("bridged-hexagons")
    assert len(bridged.forbidden_edges()) == 1
    assert bridged.is_weakly_elementary() and not bridged.is_elementary()

    info = bridged.analyze()
    assert info["finite_faces"] == 2

    try:
        pyreskit.PlaneGraph.from_json("{}")
    except pyreskit.ReskitError as e:
        print("schema error:", e)
    else:
        raise AssertionError("expected a schema error")

    try:
        fib.resonance_graph(limit=3)
    except pyreskit.LimitExceededError:
        pass
    else:
        raise AssertionError("expected the limit to be hit")

    report = pyreskit.verify("chains:5")
    assert report["disagreements"] == 0 and not report["errors"], report
    print(f"verified {report['graphs']} chains, {len(pyreskit.verify('empty')['reports'])} empty")
    print("ok")


if __name__ == "__main__":
    main()

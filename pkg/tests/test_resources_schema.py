from schurdim import homdim, oracle, schur, symchar, util
from schurdim.homdim import DimReport, ModuleLabel
from schurdim.lattice import Context


def test_schema_shipped():
    assert (util.RESCR_PATH / "dimreport.schema.json").exists()
    schema = util.load_schema()
    assert set(schema["definitions"]) >= {
        "ModuleLabel", "DimReport", "BlockDimRow", "SchurDimResult",
        "VerificationReport", "PieriReport"}


def test_records_have_required_keys():
    ctx = Context(2, 3)
    records = [
        (ModuleLabel("nabla", (7, 0)).to_dict(), "ModuleLabel"),
        (DimReport(ModuleLabel("symmetric_power", degree=7), "wfd", 2,
                   status="upper_bound").to_dict(), "DimReport"),
        (schur.wfd_schur(ctx, 7).to_dict(), "SchurDimResult"),
        (schur.wfd_schur(Context(3, 3), 4).to_dict(), "SchurDimResult"),
        (oracle.verify_length_equalities((7, 0), ctx).to_dict(),
         "VerificationReport"),
        (symchar.verify_pieri_ses(1, 1, ctx).to_dict(), "PieriReport"),
    ]
    records += [(row.to_dict(), "BlockDimRow")
                for row in homdim.block_dimension_table((7, 0), ctx)]
    for record, kind in records:
        assert util.missing_keys(record, kind) == [], kind


def test_block_header_matches_schema():
    required = util.load_schema()["definitions"]["BlockDimRow"]["required"]
    assert tuple(required) == homdim.BLOCK_CSV_HEADER


def test_unknown_kind():
    assert util.missing_keys({}, "DimReport") == ["label", "invariant",
                                                  "value", "status"]
    try:
        util.missing_keys({}, "Foo")
    except ValueError:
        pass
    else:
        assert False, "unknown record kind accepted"


if __name__ == "__main__":
    # Run all tests
    loc = locals()
    for key in list(loc.keys()):
        if key.startswith("test_") and hasattr(loc[key], "__call__"):
            loc[key]()

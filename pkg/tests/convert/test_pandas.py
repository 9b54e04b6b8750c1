import contlie as cl


def test_to_relation_dataframe(chain_tree):
    df = cl.to_relation_dataframe(chain_tree)
    assert list(df.columns) == [
        "path",
        "role",
        "status",
        "kind",
        "alpha",
        "overlap",
        "relation",
        "consequence",
        "flags",
    ]
    assert df["path"].tolist() == ["root", "L", "R"]
    assert df["status"].tolist() == ["active", "pruned", "active"]
    r = df.iloc[2]
    assert r["kind"] == "R1"
    assert r["relation"] == "d chi = phi . alpha_1_R"
    assert df.iloc[0]["kind"] == ""


def test_to_kernel_dataframe(gv):
    df = cl.to_kernel_dataframe(gv)
    assert list(df.columns) == ["kernel", "rule", "shared", "output", "shape"]
    assert df["kernel"].tolist() == ["K_{+1,-1}", "K_{+1,0}", "K_{0,-1}", "K_{0,+1}"]
    assert df["rule"].tolist()[:2] == ["zero", "tuple-merge"]
    assert df.iloc[0]["shared"] == ""


def test_to_kernel_dataframe_numeric(sl2):
    df = cl.to_kernel_dataframe(cl.principal_presentation(sl2))
    assert set(df["shape"]) == {"8x8x8"}


def test_to_check_dataframe():
    df = cl.to_check_dataframe(cl.verify_delta_squared_zero(2))
    assert df["p"].tolist() == [0, 1, 2]
    df = cl.to_check_dataframe(cl.dga_law_suite(max_symbols=2, nsamples=20))
    assert list(df.columns) == ["check", "cases", "failures"]
    assert (df["failures"] == 0).all()

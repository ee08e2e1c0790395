import pytest

import ordfree


@pytest.fixture
def zz():
    return ordfree.parse_group("Z*Z")


def test_group_round_trip(zz):
    assert str(zz) == "Z*Z"
    assert ordfree.parse_group("(Z*Z)*Z") != ordfree.parse_group("Z*Z*Z")
    assert zz.generator_count == 2


def test_compare_and_sign(zz):
    order = ordfree.parse_order("default", zz)
    x1 = ordfree.parse_element("x1", zz)
    x2 = ordfree.parse_element("x2", zz)
    assert ordfree.compare(order, zz, x1, x2) == ordfree.Verdict.GREATER
    one = ordfree.identity(zz)
    comm = ordfree.parse_element("x1*x2*x1^-1*x2^-1", zz)
    assert ordfree.compare(order, zz, one, comm) == ordfree.Verdict.LESS


def test_group_arithmetic(zz):
    u = ordfree.parse_element("x1*x2^-1", zz)
    v = ordfree.parse_element("x2*x1", zz)
    product = ordfree.multiply(zz, u, v)
    assert ordfree.print_element(product, zz) == "x1^2"
    assert ordfree.is_identity(ordfree.multiply(zz, u, ordfree.inverse(zz, u)))
    big = ordfree.power(zz, ordfree.parse_element("x1", zz), 10**30)
    assert ordfree.print_element(big, zz) == "x1^%d" % 10**30


def test_alpha_and_kernel(zz):
    comm = ordfree.parse_element("x1*x2*x1^-1*x2^-1", zz)
    image = ordfree.alpha(zz, comm)
    assert ordfree.print_element(image, ordfree.alpha_target(zz)) == "(1, 1)"
    assert ordfree.kernel_membership(zz, comm)
    assert not ordfree.kernel_membership(zz, ordfree.parse_element("x1", zz))


def test_certificate_replay(zz):
    order = ordfree.parse_order("default", zz)
    u = ordfree.parse_element("x2", zz)
    v = ordfree.parse_element("x1*x2^-1", zz)
    verdict, cert = ordfree.compare_with_certificate(order, zz, u, v)
    assert verdict == ordfree.Verdict.LESS
    assert '"leaf"' in cert
    assert ordfree.replay(cert, order, zz, u, v) == verdict


def test_validation_errors(zz):
    with pytest.raises(ordfree.ShapeMismatchError):
        ordfree.parse_order("lex(std,std)", zz)
    with pytest.raises(ordfree.ParseError):
        ordfree.parse_element("x9", zz)
    d = ordfree.parse_group("ZxZ")
    with pytest.raises(ordfree.DegenerateVecLexError):
        ordfree.parse_order("veclex[[1,1]]", d)


def test_witness(zz):
    a = ordfree.parse_order("bergman(std,std)", zz)
    b = ordfree.parse_order("bergman(rev,std)", zz)
    witness = ordfree.find_distinguishing_witness(a, b, zz)
    assert witness is not None
    assert ordfree.print_element(witness, zz) == "x1"
    assert ordfree.find_distinguishing_witness(a, a, zz) is None


def test_braids():
    braid = ordfree.parse_braid("s1", 2)
    f2 = ordfree.free_group(2)
    image = ordfree.artin_apply(braid, ordfree.parse_element("x1", f2))
    assert ordfree.print_element(image, f2) == "x1*x2*x1^-1"

    result = ordfree.check_order_preserving(
        braid, ordfree.Ordering.standard(f2), 3, 2)
    assert not result["pass"]
    assert result["counterexample"] == ("x2", "x1")

    squared = ordfree.parse_braid("s1 s1", 2)
    result = ordfree.check_order_preserving(
        squared, ordfree.Ordering.standard(f2), 2, 1)
    assert result["pass"]

    tensor = ordfree.braid_tensor(squared, squared)
    assert tensor.strands == 4
    assert str(tensor) == "s1 s1 s3 s3"


def test_injectivity_check(zz):
    report = ordfree.injectivity_check(zz, 2, 1)
    assert report["ok"]
    assert report["words_checked"] == 12
    assert report["counterexample"] is None


def test_rho_string(zz):
    text = ordfree.rho_string(zz, ordfree.parse_element("x1", zz))
    assert "(x1, 1)" in text

import json
import random

import pytest

from ganz.certfile import dumps, load, loads
from ganz.certificates import cone_value, verify_radical_cert
from ganz.errors import CertificateFormatError
from ganz.instances import random_cone_cert, random_radical_cert, sd, shipped_radical_certs


def test_round_trip_random():
    rng = random.Random(21)
    s = sd(["x1", "x2", "1-x1-x2"], ["x1*x2"], nvars=2)
    for _ in range(50):
        cert = random_cone_cert(rng, s)
        s2, back = loads(dumps(s, cert))
        assert s2 == s and back == cert
        assert cone_value(back, s2) == cone_value(cert, s)
        rad = random_radical_cert(rng, s)
        s3, back = loads(dumps(s, rad))
        assert back == rad
        assert dumps(s3, back) == dumps(s, rad)


def test_shipped_round_trip(tmp_path):
    for name, s, cert in shipped_radical_certs():
        path = tmp_path / "c.json"
        path.write_text(dumps(s, cert))
        s2, back = load(path)
        assert verify_radical_cert(back, s2).valid, name


def _doc():
    name, s, cert = shipped_radical_certs()[0]
    return json.loads(dumps(s, cert))


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(extra=1),
        lambda d: d.pop("kind"),
        lambda d: d.update(version=99),
        lambda d: d.update(kind="other"),
        lambda d: d["set"].update(p=["x1 +"]),
        lambda d: d["radical"].update(h="x3"),
        lambda d: d["radical"]["coeffs"][0].update(t_m="x1"),
    ],
)
def test_rejects_malformed(mutate):
    d = _doc()
    mutate(d)
    with pytest.raises(CertificateFormatError):
        loads(json.dumps(d))


def test_rejects_non_json():
    with pytest.raises(CertificateFormatError):
        loads("not json")

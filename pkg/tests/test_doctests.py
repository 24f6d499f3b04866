import doctest

import clusterlab.linalg
import clusterlab.qtorus


def test_doctests():
    for module in (clusterlab.linalg, clusterlab.qtorus):
        result = doctest.testmod(module)
        assert result.failed == 0

"""Custom Json Encoder for reports and log records"""

import json
import math
from fractions import Fraction


class ReportJSONEncoder(json.JSONEncoder):
    """JSON serializer that understands the engine objects.

    Anything exposing ``to_json()`` is serialized through it, sets become sorted lists,
    rationals become strings and everything else falls back to ``str``.
    """

    def default(self, o):
        """
        Default object serialization
        :param o: Object data
        :return: JSON compatible value
        """

        to_json = getattr(o, 'to_json', None)
        if callable(to_json):
            return to_json()

        if isinstance(o, (set, frozenset)):
            return sorted(o, key=str)

        if isinstance(o, Fraction):
            return str(o)

        if isinstance(o, float) and math.isinf(o):
            return "inf"

        return str(o)

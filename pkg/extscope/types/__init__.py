"""Export resources."""

from .context import Context
from .json_encoder import ReportJSONEncoder

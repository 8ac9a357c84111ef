from .util import FIELD, ChartInstance, random_profile, random_instance, chart_generators

__all__ = ["FIELD", "ChartInstance", "random_profile", "random_instance", "chart_generators"]

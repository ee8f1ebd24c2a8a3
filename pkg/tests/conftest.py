from hypothesis import settings

# single examples may sweep a whole word corpus; wall time is budgeted at the
# suite level instead of per example
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

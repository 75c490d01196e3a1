from hypothesis import settings

# exact-arithmetic examples vary a lot in cost; wall-clock deadlines only
# add flakiness here
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

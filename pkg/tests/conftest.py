from hypothesis import settings

settings.register_profile("ecq", deadline=None, derandomize=True, max_examples=60)
settings.load_profile("ecq")

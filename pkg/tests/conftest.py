from hypothesis import settings

settings.register_profile("package", deadline=None, max_examples=100)
settings.load_profile("package")

// anchor for the shared precompiled header

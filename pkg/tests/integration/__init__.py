"""
Integration tests for the command-line front end.

These run whole suites through ``run`` and ``main`` and check the emitted
reports and exit codes.
"""

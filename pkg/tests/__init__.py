"""Test suite for trivalent_verlinde."""

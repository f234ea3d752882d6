"""
Tests for the odengine package
"""

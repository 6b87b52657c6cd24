"""Utility functions and constants"""

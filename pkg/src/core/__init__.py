"""Core configuration, errors and exact algebra"""

"""Model tests"""

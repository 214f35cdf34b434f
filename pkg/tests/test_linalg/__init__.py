"""Linear algebra tests"""

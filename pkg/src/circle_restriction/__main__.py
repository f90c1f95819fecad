from circle_restriction import main

main()
